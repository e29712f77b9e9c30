#include "fusionkit/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not-applicable";
  }
  return "?";
}

CentralElement CentralElement::unit(std::size_t rank) {
  return CentralElement{std::vector<Complex>(rank, Complex(1.0))};
}

CentralElement CentralElement::indicator(std::size_t rank, const IndexSet& set) {
  CentralElement e{std::vector<Complex>(rank, Complex(0.0))};
  for (Index i : set) e.action.at(i) = 1.0;
  return e;
}

CentralElement CentralElement::operator*(const CentralElement& rhs) const {
  CentralElement out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.action[i] *= rhs.action.at(i);
  return out;
}

CentralElement CentralElement::operator+(const CentralElement& rhs) const {
  CentralElement out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.action[i] += rhs.action.at(i);
  return out;
}

CentralElement CentralElement::operator*(double s) const {
  CentralElement out = *this;
  for (auto& a : out.action) a *= s;
  return out;
}

std::pair<double, Index> CentralElement::distance(const CentralElement& rhs) const {
  double worst = 0;
  Index at = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    const double d = std::abs(action[i] - rhs.action.at(i));
    if (d > worst) worst = d, at = i;
  }
  return {worst, at};
}

CentralElement class_sum(const DimensionData& dims, const CharacterTable& table, std::size_t j) {
  const auto r = static_cast<std::size_t>(table.values.cols());
  CentralElement c{std::vector<Complex>(r)};
  for (Index i = 0; i < r; ++i) c.action[i] = table.class_dims[j] * table(j, i) / dims[i];
  return c;
}

SupportData support(const BasedRing& ring, const DimensionData& dims, const CharacterTable& table,
                    const IndexSet& subring, double tol) {
  SupportData out;
  out.subring = subring;
  const double dim = dims.dimension_of(ring, subring);
  for (std::size_t j = 0; j < table.size(); ++j) {
    Complex s = 0;
    for (Index i : subring) s += dims[i] / static_cast<double>(ring.norm(i)) * table(j, i);
    s /= dim;
    const bool one = std::abs(s - 1.0) < tol;
    if (!one && std::abs(s) >= tol) {
      std::ostringstream os;
      os << "lambda_D is not idempotent: mu_" << j << "(lambda_D) = " << s.real() << "+"
         << s.imag() << "i";
      throw NumericError(os.str(), std::min(std::abs(s - 1.0), std::abs(s)));
    }
    out.lambda_values.push_back(one ? 1.0 : 0.0);
    if (one) out.support.push_back(j);
  }
  return out;
}

CentralElement harada_lhs(const DimensionData& dims, const CharacterTable& table) {
  const auto r = static_cast<std::size_t>(table.values.cols());
  CentralElement out{std::vector<Complex>(r, Complex(1.0))};
  for (Index i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) out.action[i] *= table(j, i) / dims[i];
    out.action[i] *= out.action[i];
  }
  return out;
}

bool HaradaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Verdict& v) { return v.passed(); });
}

namespace {

Verdict compare(std::string name, const CentralElement& lhs, const CentralElement& rhs,
                const BasedRing& ring, double tol) {
  double scale = 1.0;
  for (const auto& a : rhs.action) scale = std::max(scale, std::abs(a));
  const auto [dist, at] = lhs.distance(rhs);
  Verdict v;
  v.check = std::move(name);
  v.residual = dist / scale;
  v.outcome = *v.residual < tol ? Outcome::pass : Outcome::fail;
  if (v.failed()) {
    std::ostringstream os;
    os << "mismatch at " << ring.labels()[at] << ": " << lhs.action[at].real() << " vs "
       << rhs.action[at].real();
    v.details = os.str();
  }
  return v;
}

}  // namespace

HaradaReport verify_harada(const BasedRing& ring, const DimensionData& dims,
                           const CharacterTable& table, double tol) {
  if (!ring.is_commutative()) throw PreconditionError("Harada identity needs a commutative ring");
  HaradaReport rep;
  const std::size_t r = ring.rank();
  rep.invertibles = invertibles(ring);
  rep.pointed = subring_closure(ring, rep.invertibles);
  rep.pointed_dim = dims.dimension_of(ring, rep.pointed);
  rep.pointed_support = support(ring, dims, table, rep.pointed).support;
  rep.lhs = harada_lhs(dims, table);

  const CentralElement indicator = CentralElement::indicator(r, rep.invertibles);
  CentralElement sums{std::vector<Complex>(r, Complex(0.0))};
  for (std::size_t j : rep.pointed_support) sums = sums + class_sum(dims, table, j);
  const double ratio = dims.total / rep.pointed_dim;

  rep.checks.push_back(compare("harada.a", rep.lhs, indicator, ring, tol));
  rep.checks.push_back(compare("harada.b", rep.lhs, sums * (1.0 / ratio), ring, tol));
  rep.checks.push_back(compare("harada.c", indicator * ratio, sums, ring, tol));
  return rep;
}

namespace {

std::optional<std::int64_t> snapped(double x, double snap) {
  const double r = std::round(x);
  if (std::abs(x - r) < snap * std::max(1.0, std::abs(x))) return static_cast<std::int64_t>(r);
  return std::nullopt;
}

}  // namespace

Verdict check_codegree_divisibility(const BasedRing& ring, const DimensionData& dims,
                                 const CharacterTable& table, double snap) {
  const std::string name = "divisibility.codegree";
  const IndexSet pointed = subring_closure(ring, invertibles(ring));
  const auto total = snapped(dims.total, snap);
  const auto pt = snapped(dims.dimension_of(ring, pointed), snap);
  if (!total || !pt || *pt == 0 || *total % *pt != 0)
    return not_applicable(name, "dim(C)/dim(C_pt) is not an integer");
  BigInt product = 1;
  std::ostringstream factors;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const auto c = snapped(table.class_dims[j], snap);
    if (!c) return not_applicable(name, "class dimension " + std::to_string(j) + " is not an integer");
    product *= *c;
    factors << (j ? "*" : "") << *c;
  }
  const std::int64_t ratio = *total / *pt;
  const bool ok = product % ratio == 0;
  return make_verdict(name, ok,
                      std::to_string(ratio) + (ok ? " | " : " does not divide ") +
                          product.str() + " = " + factors.str());
}

Verdict check_modular_divisibility(const BasedRing& ring, const DimensionData& dims, bool modular) {
  const std::string name = "divisibility.modular";
  if (!modular) return not_applicable(name, "ring is not declared modular");
  if (!dims.weakly_integral() || !dims.total_exact)
    return not_applicable(name, "dimensions are not weakly integral");
  const IndexSet pointed = subring_closure(ring, invertibles(ring));
  const auto pt = dims.exact_dimension_of(ring, pointed);
  const auto ad = dims.exact_dimension_of(ring, adjoint_subring(ring));
  if (!pt || !ad || *dims.total_exact % *pt != 0)
    return not_applicable(name, "dim(C)/dim(C_pt) is not an integer");
  const std::int64_t ratio = *dims.total_exact / *pt;
  if (ratio != *ad)
    return make_verdict(name, false,
                        "dim(C_ad) = " + std::to_string(*ad) + " but dim(C)/dim(C_pt) = " +
                            std::to_string(ratio) + "; the modular flag is inconsistent");
  BigInt product = 1;
  for (const auto& d : dims.dims) product *= d.square;
  const bool ok = product % ratio == 0;
  return make_verdict(name, ok,
                      std::to_string(ratio) + (ok ? " | " : " does not divide ") + product.str());
}

Verdict check_modular_class_dims(const BasedRing& ring, const DimensionData& dims,
                                 const CharacterTable& table, bool modular, double snap) {
  const std::string name = "modular.class-dims";
  if (!modular) return not_applicable(name, "ring is not declared modular");
  std::vector<double> a = table.class_dims, b;
  for (Index i = 0; i < ring.rank(); ++i) b.push_back(dims[i] * dims[i]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  Verdict v;
  v.check = name;
  v.residual = worst;
  v.outcome = worst < snap ? Outcome::pass : Outcome::fail;
  if (v.failed()) v.details = "class dimensions differ from squared dimensions of simples";
  return v;
}

}  // namespace fusionkit
