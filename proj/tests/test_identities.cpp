#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/identities.hpp"

using namespace fusionkit;

namespace {

struct Setup {
  BasedRing ring;
  DimensionData dims;
  CharacterTable table;
  explicit Setup(BasedRing r) : ring(std::move(r)), dims(fp_dims(ring)), table(compute_table(ring, dims)) {}
};

void check_action(const CentralElement& e, std::vector<double> want) {
  REQUIRE(e.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(e.action[i] - Complex(want[i])) < 1e-9);
}

}  // namespace

TEST_CASE("central element arithmetic") {
  const auto u = CentralElement::unit(3);
  const auto e = CentralElement::indicator(3, {0, 2});
  check_action(u * e, {1, 0, 1});
  check_action(e + e * 2.0, {3, 0, 3});
  const auto [dist, at] = u.distance(e);
  CHECK(dist == 1.0);
  CHECK(at == 1u);
}

TEST_CASE("class sums") {
  const Setup s(fixtures::ising());
  check_action(class_sum(s.dims, s.table, 0), {1, 1, 1});
  check_action(class_sum(s.dims, s.table, 2), {2, -2, 0});

  // Rep(S3), transposition class of size 3 acting on 1, sgn, V.
  const Setup r(fixtures::rep_s3());
  check_action(class_sum(r.dims, r.table, 2), {3, -3, 0});
}

TEST_CASE("supports of fusion subrings") {
  const Setup s(fixtures::ising());
  const auto pt = support(s.ring, s.dims, s.table, {0, 1});
  CHECK(pt.lambda_values[0] == doctest::Approx(1));
  CHECK(pt.lambda_values[1] == doctest::Approx(1));
  CHECK(std::abs(pt.lambda_values[2]) < 1e-12);
  CHECK(pt.support == std::vector<std::size_t>{0, 1});

  CHECK(support(s.ring, s.dims, s.table, {0, 1, 2}).support == std::vector<std::size_t>{0});
  CHECK(support(s.ring, s.dims, s.table, {0}).support == std::vector<std::size_t>{0, 1, 2});
  // {1, sigma} is not closed: lambda is not idempotent.
  CHECK_THROWS_AS(support(s.ring, s.dims, s.table, {0, 2}), NumericError);
}

TEST_CASE("left side of the Harada identity") {
  const Setup z(fixtures::cyclic(2));
  check_action(harada_lhs(z.dims, z.table), {1, 1});
  const Setup s(fixtures::ising());
  check_action(harada_lhs(s.dims, s.table), {1, 1, 0});
  const Setup f(fixtures::fibonacci());
  const double phi = (1 + std::sqrt(5.0)) / 2;
  check_action(harada_lhs(f.dims, f.table), {1, 1 / std::pow(phi, 4)});
}

TEST_CASE("Harada identity on weakly-integral rings") {
  for (const auto& r : {fixtures::cyclic(2), fixtures::cyclic(6), fixtures::ising(), fixtures::rep_s3(),
                        fixtures::ty_klein()}) {
    const Setup s(r);
    const auto rep = verify_harada(s.ring, s.dims, s.table);
    CHECK(rep.passed());
    REQUIRE(rep.checks.size() == 3);
    for (const auto& v : rep.checks) CHECK(*v.residual < 1e-9);
  }
  const Setup s(fixtures::ising());
  const auto rep = verify_harada(s.ring, s.dims, s.table);
  CHECK(rep.invertibles == IndexSet{0, 1});
  CHECK(rep.pointed_support == std::vector<std::size_t>{0, 1});
  CHECK(rep.pointed_dim == doctest::Approx(2));
}

TEST_CASE("Harada identity fails on Fibonacci") {
  const Setup f(fixtures::fibonacci());
  const auto rep = verify_harada(f.ring, f.dims, f.table);
  CHECK_FALSE(rep.passed());
  CHECK(rep.checks[0].check == "harada.a");
  CHECK(rep.checks[0].failed());
  CHECK(*rep.checks[0].residual == doctest::Approx(0.1458980338).epsilon(1e-8));
}

TEST_CASE("codegree divisibility") {
  const Setup s(fixtures::ising());
  CHECK(check_codegree_divisibility(s.ring, s.dims, s.table).passed());
  const Setup r(fixtures::rep_s3());
  const auto v = check_codegree_divisibility(r.ring, r.dims, r.table);
  CHECK(v.passed());
  CHECK(v.exact);
  const Setup z(fixtures::cyclic(4));
  CHECK(check_codegree_divisibility(z.ring, z.dims, z.table).passed());
  const Setup f(fixtures::fibonacci());
  CHECK(check_codegree_divisibility(f.ring, f.dims, f.table).outcome == Outcome::not_applicable);
}

TEST_CASE("modular divisibility and class dimensions") {
  const Setup t(fixtures::cyclic(2));
  CHECK(check_modular_divisibility(t.ring, t.dims, true).passed());
  CHECK(check_modular_divisibility(t.ring, t.dims, false).outcome == Outcome::not_applicable);

  const Setup i(fixtures::ising());
  CHECK(check_modular_divisibility(i.ring, i.dims, true).passed());
  CHECK(check_modular_class_dims(i.ring, i.dims, i.table, true).passed());

  // Rep(S3) is not modular: class dims (1,2,3) differ from d^2 = (1,1,4).
  const Setup r(fixtures::rep_s3());
  CHECK(check_modular_class_dims(r.ring, r.dims, r.table, true).failed());
  CHECK(check_modular_divisibility(r.ring, r.dims, true).failed());
}
