#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "fixtures.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/group_algebra.hpp"

using namespace fusionkit;

namespace {

// Naive oracle: conjugacy classes, G' and prod_j C_j/|C_j| straight from
// the multiplication table with rational coefficients on group elements.
struct Oracle {
  std::vector<std::vector<std::uint32_t>> classes;
  std::set<std::uint32_t> commutator;
  std::vector<Rational> product;  // coefficient per element
};

Oracle oracle(const CayleyTable& t) {
  const std::uint32_t n = static_cast<std::uint32_t>(t.order);
  Oracle o;
  std::vector<bool> seen(n, false);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<std::uint32_t> cls;
    for (std::uint32_t g = 0; g < n; ++g) cls.insert(t(t(g, x), t.inv[g]));
    for (auto y : cls) seen[y] = true;
    o.classes.emplace_back(cls.begin(), cls.end());
  }
  o.commutator.insert(t.identity);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) o.commutator.insert(t(t(t.inv[a], t.inv[b]), t(a, b)));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint32_t> cur(o.commutator.begin(), o.commutator.end());
    for (auto a : cur)
      for (auto b : cur) grew = o.commutator.insert(t(a, b)).second || grew;
  }
  o.product.assign(n, Rational(0));
  o.product[t.identity] = 1;
  for (const auto& cls : o.classes) {
    std::vector<Rational> next(n, Rational(0));
    for (std::uint32_t x = 0; x < n; ++x)
      if (o.product[x] != 0)
        for (auto y : cls) next[t(x, y)] += o.product[x] / static_cast<long>(cls.size());
    o.product = next;
  }
  return o;
}

std::vector<std::size_t> sorted_sizes(const ClassData& cd) {
  auto s = cd.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("(0 1 2)", 4) == Permutation{1, 2, 0, 3});
  CHECK(parse_cycles("()", 3) == Permutation{0, 1, 2});
  CHECK(parse_cycles("(0 1)(2 3)", 4) == Permutation{1, 0, 3, 2});
  CHECK(parse_cycles(" (0,2) ", 3) == Permutation{2, 1, 0});
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1 0)", 3), ParseError);
  CHECK_THROWS_AS(checked_permutation({0, 0, 1}), ParseError);
  CHECK(compose({1, 2, 0}, {1, 0, 2}) == Permutation{2, 1, 0});
}

TEST_CASE("closure orders") {
  CHECK(fixtures::group({"(0 1 2)"}, 3).order == 3);
  CHECK(fixtures::group({"(0 1)", "(0 1 2)"}, 3).order == 6);
  CHECK(fixtures::group({"(0 1 2 3)", "(0 2)"}, 4).order == 8);
  CHECK(fixtures::group({"(0 1 2 3 4)", "(0 1)"}, 5).order == 120);
  CHECK(fixtures::group({}, 1).order == 1);
  CHECK_THROWS_AS(cayley_from_generators(std::vector<Permutation>{parse_cycles("(0 1 2 3 4 5 6 7)", 8),
                                                                  parse_cycles("(0 1)", 8)},
                                         {1000, kernels::Mode::serial}),
                  SizeError);
}

TEST_CASE("Cayley tables are validated") {
  CHECK(CayleyTable::from_table(2, {0, 1, 1, 0}).order == 2);
  CHECK_THROWS_AS(CayleyTable::from_table(2, {0, 1, 1, 1}), StructuralError);
  CHECK_THROWS_AS(CayleyTable::from_table(2, {0, 1, 1}), StructuralError);
  // Latin square without associativity.
  CHECK_THROWS_AS(CayleyTable::from_table(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}), StructuralError);
}

TEST_CASE("S3 classes and constants") {
  const auto t = fixtures::group({"(0 1)", "(0 1 2)"}, 3);
  const auto cd = class_data(t);
  CHECK(sorted_sizes(cd) == std::vector<std::size_t>{1, 2, 3});
  CHECK(cd.commutator.size() == 3);
  std::size_t tr = 0, cy = 0;
  for (std::size_t j = 0; j < cd.count(); ++j) {
    if (cd.sizes[j] == 3) tr = j;
    if (cd.sizes[j] == 2) cy = j;
  }
  // C_t^2 = 3 C_e + 3 C_c
  CHECK(cd.a(tr, tr, 0) == 3);
  CHECK(cd.a(tr, tr, cy) == 3);
  CHECK(cd.a(tr, tr, tr) == 0);
  CHECK(cd.a(tr, cy, tr) == 2);
  CHECK(cd.commutator_classes().size() == 2);
}

TEST_CASE("Q8, abelian and trivial groups") {
  const auto q8 = class_data(fixtures::corpus_group("008_Q8.json"));
  CHECK(sorted_sizes(q8) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(q8.commutator.size() == 2);

  const auto z4 = class_data(fixtures::group({"(0 1 2 3)"}, 4));
  CHECK(z4.count() == 4);
  CHECK(z4.commutator.size() == 1);
  const auto ring = class_algebra_as_ring(z4);
  CHECK(validate(ring, Profile::fusion).ok());
  CHECK(invertibles(ring).size() == 4);

  const auto one = class_data(fixtures::group({}, 1));
  CHECK(one.count() == 1);
  CHECK(verify_harada_group(one).verdict.passed());
}

TEST_CASE("class algebra is a valid based ring") {
  const auto cd = class_data(fixtures::corpus_group("024_S4.json"));
  const auto ring = class_algebra_as_ring(cd);
  CHECK(validate(ring, Profile::based).ok());
  CHECK_FALSE(validate(ring, Profile::fusion).ok());
  CHECK(ring.is_commutative());
}

TEST_CASE("exact Harada identity agrees with the naive oracle") {
  for (const auto& name : {"006_S3.json", "008_D4.json", "008_Q8.json", "010_D5.json", "012_A4.json",
                           "016_Pauli.json", "021_Z7sdZ3.json", "024_SL2_3.json"}) {
    CAPTURE(name);
    const auto t = fixtures::corpus_group(name);
    const auto cd = class_data(t);
    const auto rep = verify_harada_group(cd);
    CHECK(rep.verdict.passed());
    CHECK(rep.verdict.exact);

    const auto o = oracle(t);
    CHECK(o.classes.size() == cd.count());
    CHECK(o.commutator.size() == rep.commutator_order);
    // P^2 = (1/|G'|) sum_{g in G'} g, elementwise in Q[G].
    std::vector<Rational> sq(t.order, Rational(0));
    for (std::uint32_t x = 0; x < t.order; ++x)
      for (std::uint32_t y = 0; y < t.order; ++y) sq[t(x, y)] += o.product[x] * o.product[y];
    for (std::uint32_t g = 0; g < t.order; ++g)
      CHECK(sq[g] == (o.commutator.count(g) ? Rational(1, static_cast<long>(o.commutator.size())) : Rational(0)));
    // And the class-algebra product equals the naive product class by class.
    const auto p = normalized_class_product(cd);
    for (std::size_t k = 0; k < cd.count(); ++k) CHECK(p[k] == o.product[cd.classes[k].front()]);
  }
}

TEST_CASE("group ring oracle and coset property") {
  const auto t = fixtures::corpus_group("016_SD16.json");
  const auto cd = class_data(t);
  CHECK(group_ring_oracle(t, cd).passed());
  CHECK(coset_property(t, cd).passed());
  CHECK_THROWS_AS(group_ring_oracle(t, cd, 8), SizeError);
}

TEST_CASE("serial and parallel class data agree") {
  const auto t = fixtures::corpus_group("060_A5.json");
  const auto a = class_data(t, kernels::Mode::serial), b = class_data(t, kernels::Mode::parallel);
  CHECK(a.constants == b.constants);
  CHECK(a.classes == b.classes);
  CHECK(group_ring_class_product(t, a, kernels::Mode::serial) ==
        group_ring_class_product(t, a, kernels::Mode::parallel));
}

TEST_CASE("characters and Rep(G) from the class algebra") {
  const auto cd = class_data(fixtures::corpus_group("024_S4.json"));
  const auto ring = class_algebra_as_ring(cd);
  const auto table = compute_table(ring, fp_dims(ring));
  const auto chars = group_characters(cd, table);
  auto degrees = chars.degrees;
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<std::int64_t>{1, 1, 2, 3, 3});

  const auto rep = representation_ring(cd, chars);
  CHECK(validate(rep, Profile::fusion).ok());
  const auto d = fp_dims(rep);
  CHECK(d.total_exact == 24);
  // 3 (x) 3 = 1 + 2 + 3 + 3' in Rep(S4): four summands.
  const Index three = 3;
  CHECK(rep.product_support(three, three).size() == 4);
  auto rt = compute_table(rep, d);
  std::vector<double> dims = rt.class_dims;
  std::sort(dims.begin(), dims.end());
  const std::vector<double> sizes{1, 3, 6, 6, 8};
  for (std::size_t j = 0; j < 5; ++j) CHECK(dims[j] == doctest::Approx(sizes[j]));
}

TEST_CASE("every corpus group satisfies the exact identity") {
  for (const auto& e : std::filesystem::directory_iterator(fixtures::corpus("groups"))) {
    if (e.path().extension() != ".json") continue;
    CAPTURE(e.path().string());
    const auto t = std::get<io::GroupFile>(io::load_file(e.path()).content).table;
    CHECK(verify_harada_group(class_data(t)).verdict.passed());
  }
}
