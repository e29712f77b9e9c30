#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "fusionkit/kernels.hpp"

using namespace fusionkit;
using kernels::Mode;

TEST_CASE("associativity kernels agree") {
  // Corrupt one entry of Rep(S4) so there are failures to count.
  const auto good = fixtures::corpus_ring("rep_S4.json").ring;
  auto c = std::vector<std::int64_t>(good.constants().begin(), good.constants().end());
  const std::size_t r = good.rank();
  c[(4 * r + 4) * r + 2] += 1;
  const BasedRing bad(good.labels(), c, good.duals(), good.unit());

  for (const auto& ring : {good, bad}) {
    const auto s = kernels::associativity(ring, Mode::serial);
    const auto p = kernels::associativity(ring, Mode::parallel);
    CHECK(s.failures == p.failures);
    CHECK(s.first == p.first);
  }
  CHECK(kernels::associativity(good, Mode::serial).failures == 0);
  const auto b = kernels::associativity(bad, Mode::parallel, 3);
  CHECK(b.failures > 3);
  CHECK(b.first.size() == 3);
}

TEST_CASE("permutation products agree") {
  const auto t = fixtures::corpus_group("024_S4.json");
  std::vector<kernels::Permutation> elems(t.order, kernels::Permutation(t.order));
  kernels::PermutationIndex index;
  for (std::uint32_t a = 0; a < t.order; ++a) {
    for (std::uint32_t x = 0; x < t.order; ++x) elems[a][x] = t(a, x);
    index.emplace(elems[a], a);
  }
  const auto s = kernels::permutation_products(elems, index, Mode::serial);
  CHECK(s == kernels::permutation_products(elems, index, Mode::parallel));
  CHECK(s == t.mul);
}

TEST_CASE("class constants agree") {
  const auto t = fixtures::corpus_group("027_Heis27.json");
  const auto cd = class_data(t, Mode::serial);
  std::vector<std::uint32_t> reps;
  for (const auto& c : cd.classes) reps.push_back(c.back());
  CHECK(kernels::class_constants(t, cd.class_of, reps, Mode::serial) ==
        kernels::class_constants(t, cd.class_of, reps, Mode::parallel));
}

TEST_CASE("convolution agrees and is the group-ring product") {
  const auto t = fixtures::corpus_group("020_F20.json");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> v(-50, 50);
  std::vector<std::int64_t> x(t.order), y(t.order);
  for (auto& e : x) e = v(rng);
  for (auto& e : y) e = v(rng);
  const auto s = kernels::convolve(t, x, y, Mode::serial);
  CHECK(s == kernels::convolve(t, x, y, Mode::parallel));

  std::vector<std::int64_t> naive(t.order, 0);
  for (std::uint32_t a = 0; a < t.order; ++a)
    for (std::uint32_t b = 0; b < t.order; ++b) naive[t(a, b)] += x[a] * y[b];
  CHECK(s == naive);

  std::vector<BigInt> bx(x.begin(), x.end()), by(y.begin(), y.end());
  const auto big = kernels::convolve(t, bx, by, Mode::parallel);
  for (std::size_t g = 0; g < t.order; ++g) CHECK(big[g] == BigInt(naive[g]));
}
