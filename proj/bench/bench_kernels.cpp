// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <numeric>

#include "fusionkit/group_algebra.hpp"
#include "fusionkit/kernels.hpp"

using namespace fusionkit;
using kernels::Mode;

namespace {

CayleyTable symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  Permutation cycle(n), swap(n);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  gens.push_back(cycle);
  gens.push_back(swap);
  return cayley_from_generators(gens, {100000, Mode::parallel});
}

// Group ring Z[G] as a pointed based ring of rank |G|.
BasedRing group_ring(const CayleyTable& t) {
  const std::size_t n = t.order;
  std::vector<std::int64_t> c(n * n * n, 0);
  std::vector<Index> dual(n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    dual[a] = t.inv[a];
    labels[a] = "g" + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) c[(a * n + b) * n + t(a, b)] = 1;
  }
  return BasedRing(labels, c, dual, t.identity);
}

Mode mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Mode::serial : Mode::parallel;
}

void BM_Associativity(benchmark::State& state) {
  static const BasedRing ring = group_ring(symmetric_group(4));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::associativity(ring, mode_of(state)));
}
BENCHMARK(BM_Associativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassConstants(benchmark::State& state) {
  static const CayleyTable table = symmetric_group(5);
  static const ClassData cd = class_data(table, Mode::serial);
  std::vector<std::uint32_t> reps;
  for (const auto& c : cd.classes) reps.push_back(c.front());
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::class_constants(table, cd.class_of, reps, mode_of(state)));
}
BENCHMARK(BM_ClassConstants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Convolve(benchmark::State& state) {
  static const CayleyTable table = symmetric_group(5);
  std::vector<BigInt> x(table.order), y(table.order);
  for (std::size_t g = 0; g < table.order; ++g) {
    x[g] = BigInt(g % 7) * BigInt(1000003);
    y[g] = BigInt((g * 13) % 11);
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve(table, x, y, mode_of(state)));
}
BENCHMARK(BM_Convolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PermutationProducts(benchmark::State& state) {
  static const CayleyTable table = symmetric_group(5);
  // Left-regular images reproduce the table as permutations.
  std::vector<Permutation> elements(table.order, Permutation(table.order));
  kernels::PermutationIndex index;
  for (std::uint32_t a = 0; a < table.order; ++a) {
    for (std::uint32_t x = 0; x < table.order; ++x) elements[a][x] = table(a, x);
    index.emplace(elements[a], a);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::permutation_products(elements, index, mode_of(state)));
}
BENCHMARK(BM_PermutationProducts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
