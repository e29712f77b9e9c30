#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "fixtures.hpp"
#include "fusionkit/arith_filter.hpp"
#include "fusionkit/error.hpp"

using namespace fusionkit;

namespace {

CategoryType type(std::vector<std::pair<std::uint64_t, std::uint64_t>> dn) {
  return CategoryType::from_dims(dn);
}

// Independent generator: walk square values from the top down, choosing a
// multiplicity (possibly zero) for each; whatever remains is n_1.
std::set<std::vector<TypeEntry>> brute_force(std::uint64_t n, bool weak) {
  std::vector<std::uint64_t> values;
  for (std::uint64_t k = 2;; ++k) {
    const std::uint64_t s = weak ? k : k * k;
    if (s >= n) break;
    values.push_back(s);
  }
  std::reverse(values.begin(), values.end());
  std::set<std::vector<TypeEntry>> out;
  std::vector<TypeEntry> chosen;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t at, std::uint64_t left) {
    if (left == 0) return;  // n_1 >= 1
    if (at == values.size()) {
      std::vector<TypeEntry> t{{1, left}};
      t.insert(t.end(), chosen.rbegin(), chosen.rend());
      out.insert(t);
      return;
    }
    rec(at + 1, left);
    for (std::uint64_t m = 1; m * values[at] < left; ++m) {
      chosen.push_back({values[at], m});
      rec(at + 1, left - m * values[at]);
      chosen.pop_back();
    }
  };
  rec(0, n);
  return out;
}

std::set<std::vector<TypeEntry>> as_set(const std::vector<Candidate>& cs) {
  std::set<std::vector<TypeEntry>> out;
  for (const auto& c : cs) out.insert(c.type.entries());
  return out;
}

}  // namespace

TEST_CASE("factorization and square-free split") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(999983) == std::vector<PrimePower>{{999983, 1}});
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK(squarefree_split(36).squarefree == 1);
  CHECK(squarefree_split(36).square_part == 36);
  CHECK(squarefree_split(12).squarefree == 3);
  CHECK(squarefree_split(12).square_part == 4);
  CHECK(squarefree_split(180).squarefree == 5);
  CHECK(squarefree_split(180).square_part == 36);
  CHECK(squarefree_split(8).squarefree == 1);  // 2^3: no prime divides exactly once
  CHECK(is_square(1000000));
  CHECK_FALSE(is_square(999999));
}

TEST_CASE("squares split trivially") {
  for (std::uint64_t k = 1; k <= 1000; ++k) {
    const auto s = squarefree_split(k * k);
    CHECK(s.squarefree == 1);
    CHECK(s.square_part == k * k);
  }
}

TEST_CASE("square-free part is multiplicative on coprime arguments") {
  for (std::uint64_t a = 1; a <= 120; ++a)
    for (std::uint64_t b = 1; b <= 120; ++b)
      if (gcd_u64(a, b) == 1)
        CHECK(squarefree_split(a * b).squarefree == squarefree_split(a).squarefree * squarefree_split(b).squarefree);
}

TEST_CASE("category types") {
  const auto t = type({{2, 2}, {1, 4}});
  CHECK(t.total() == 12);
  CHECK(t.to_string() == "(1,4; 2,2)");
  CHECK(t.integral());
  CHECK(type({{1, 2}, {1, 3}}).to_string() == "(1,5)");
  CHECK_THROWS_AS(type({{2, 1}}), DomainError);
  CHECK_THROWS_AS(type({{1, 0}}), DomainError);
  const CategoryType weak({{1, 2}, {2, 1}});
  CHECK_FALSE(weak.integral());
  CHECK(weak.total() == 4);

  const auto dims = fp_dims(fixtures::rep_s3());
  CHECK(type_of(dims) == type({{1, 2}, {2, 1}}));
}

TEST_CASE("unit-part filter") {
  CHECK(check_unit_part(type({{1, 36}})).passed());
  CHECK(check_unit_part(type({{1, 4}, {2, 8}})).passed());  // N_1 = 1
  CHECK(check_unit_part(type({{1, 12}})).passed());
  CHECK(check_unit_part(type({{1, 4}, {2, 2}})).failed());
}

TEST_CASE("coprime-squares filter") {
  CHECK(check_coprime_squares(type({{1, 7}})).passed());
  CHECK(check_coprime_squares(type({{1, 4}, {2, 2}})).passed());  // 4 | 12, gcd(2, 3) = 1
  CHECK(check_coprime_squares(type({{1, 3}, {3, 1}})).failed());       // 9 does not divide 12
  CHECK(check_coprime_squares(type({{1, 20}, {4, 1}})).failed());      // 16 does not divide 36
  CHECK(check_coprime_squares(CategoryType({{1, 2}, {2, 1}})).outcome == Outcome::not_applicable);
}

TEST_CASE("pointed-multiple filter") {
  CHECK(check_pointed_multiple(type({{1, 12}})).passed());
  CHECK(check_pointed_multiple(type({{1, 4}, {2, 8}})).passed());
  // N = 60, N_1 = 15, n_1 = 4.
  CHECK(check_pointed_multiple(type({{1, 4}, {2, 14}})).failed());
  // gcd(N_1, d) > 1 leaves the hypothesis unmet: N = 18, N_1 = 2.
  CHECK(check_pointed_multiple(type({{1, 2}, {2, 4}})).outcome == Outcome::not_applicable);
}

TEST_CASE("orbit filter") {
  CHECK(check_orbit(type({{1, 4}, {2, 2}})).passed());
  CHECK(check_orbit(type({{1, 3}, {2, 1}})).failed());
}

TEST_CASE("three-square shape detection") {
  const auto s = detect_three_square_shape(6300);
  REQUIRE(s);
  CHECK(*s == ThreeSquareShape{2, 3, 5, 7});
  CHECK(detect_three_square_shape(900) == ThreeSquareShape{2, 3, 5, 1});
  CHECK_FALSE(detect_three_square_shape(16 * 9));
  CHECK_FALSE(detect_three_square_shape(1));
  CHECK_FALSE(detect_three_square_shape(4 * 9 * 25 * 49));
}

TEST_CASE("check_type reports the shape consequence") {
  const auto vs = check_type(type({{1, 6300}}), true);
  REQUIRE(vs.size() == 5);
  CHECK(vs.back().check == "shape.p2q2r2d");
  CHECK(vs.back().passed());
  for (const auto& v : vs) CHECK_FALSE(v.failed());
}

TEST_CASE("nilpotent adjoint check") {
  const auto d = fp_dims(fixtures::ty_klein());
  const auto v = check_nilpotent_adjoint(fixtures::ty_klein(), d);
  CHECK(v.passed());
  CHECK(check_nilpotent_adjoint(fixtures::cyclic(4), fp_dims(fixtures::cyclic(4))).outcome ==
        Outcome::not_applicable);
  CHECK(check_nilpotent_adjoint(fixtures::rep_s3(), fp_dims(fixtures::rep_s3())).outcome ==
        Outcome::not_applicable);
  CHECK(check_nilpotent_adjoint(fixtures::ising(), fp_dims(fixtures::ising())).outcome ==
        Outcome::not_applicable);
}

TEST_CASE("enumeration examples") {
  const auto one = enumerate_types(1, FilterFlags::none());
  REQUIRE(one.size() == 1);
  CHECK(one[0].type.to_string() == "(1,1)");

  auto all = enumerate_types(4, FilterFlags::all());
  REQUIRE(all.size() == 1);
  CHECK(all[0].type.to_string() == "(1,4)");

  auto f = FilterFlags::none();
  f.unit_part = true;
  f.coprime_squares = true;
  const auto twelve = as_set(enumerate_types(12, f));
  CHECK(twelve.count(type({{1, 12}}).entries()));
  CHECK_FALSE(twelve.count(type({{1, 4}, {2, 2}}).entries()));
  CHECK(as_set(enumerate_types(12, FilterFlags::none())).count(type({{1, 4}, {2, 2}}).entries()));

  CHECK_THROWS_AS(enumerate_types(0, FilterFlags::none()), DomainError);
  CHECK_THROWS_AS(enumerate_types(2000, FilterFlags::none(), 1000), SizeError);
}

TEST_CASE("enumeration provenance") {
  for (const auto& c : enumerate_types(12, FilterFlags::none())) {
    const bool unit = std::find(c.passed.begin(), c.passed.end(), "unit-part") != c.passed.end();
    CHECK(unit == check_unit_part(c.type).passed());
  }
}

TEST_CASE("enumerator matches brute force for N <= 200") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CAPTURE(n);
    const auto found = enumerate_types(n, FilterFlags::none());
    CHECK(as_set(found) == brute_force(n, false));
    CHECK(std::is_sorted(found.begin(), found.end(),
                         [](const Candidate& a, const Candidate& b) { return a.type < b.type; }));
  }
  auto weak = FilterFlags::none();
  weak.weakly_integral = true;
  for (std::uint64_t n = 1; n <= 30; ++n) CHECK(as_set(enumerate_types(n, weak)) == brute_force(n, true));
}

TEST_CASE("filters are monotone") {
  const std::vector<FilterFlags> chain{
      FilterFlags::none(),
      {false, true, false, false, false, false},
      {true, true, false, false, false, false},
      {true, true, true, false, false, false},
      FilterFlags::all(),
      {true, true, true, true, true, false},
  };
  for (std::uint64_t n : {12u, 36u, 60u, 72u, 100u, 144u, 180u}) {
    std::set<std::vector<TypeEntry>> prev = as_set(enumerate_types(n, chain[0]));
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const auto cur = as_set(enumerate_types(n, chain[k]));
      CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
      prev = cur;
    }
  }
}

TEST_CASE("filtered survivors pass the filters") {
  for (std::uint64_t n : {36u, 60u, 180u, 900u}) {
    for (const auto& c : enumerate_types(n, FilterFlags::all())) {
      CHECK(check_unit_part(c.type).passed());
      CHECK(check_square_divides(c.type).passed());
      CHECK(check_coprime_squares(c.type).passed());
      CHECK_FALSE(check_pointed_multiple(c.type).failed());
    }
  }
}
