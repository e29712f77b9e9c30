#include "fusionkit/dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

std::vector<double> DimensionData::values() const {
  std::vector<double> out;
  out.reserve(dims.size());
  for (const auto& d : dims) out.push_back(d.value);
  return out;
}

bool DimensionData::weakly_integral() const {
  return std::all_of(dims.begin(), dims.end(),
                     [](const Dimension& d) { return d.kind != Integrality::other; });
}

bool DimensionData::integral() const {
  return std::all_of(dims.begin(), dims.end(),
                     [](const Dimension& d) { return d.kind == Integrality::integer; });
}

double DimensionData::dimension_of(const BasedRing& ring, const IndexSet& subset) const {
  double s = 0;
  for (Index i : subset) s += dims[i].value * dims[i].value / static_cast<double>(ring.norm(i));
  return s;
}

std::optional<std::int64_t> DimensionData::exact_dimension_of(const BasedRing& ring,
                                                               const IndexSet& subset) const {
  Rational s = 0;
  for (Index i : subset) {
    if (dims[i].kind == Integrality::other) return std::nullopt;
    s += Rational(dims[i].square, ring.norm(i));
  }
  if (denominator(s) != 1) return std::nullopt;
  return static_cast<std::int64_t>(numerator(s));
}

namespace {

// Power iteration on the transpose of M = sum_i N_i. The dimension vector
// satisfies sum_k N_ij^k d_k = d_i d_j, so it is the positive left Perron
// vector of M. Right eigenvectors only agree with it when N_i^T = N_{i*},
// which fails for class algebras.
std::vector<double> perron_vector(const BasedRing& ring, double tol) {
  const std::size_t r = ring.rank();
  std::vector<double> m(r * r, 0.0);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) m[j * r + k] += static_cast<double>(ring(i, j, k));

  std::vector<double> x(r, 1.0), y(r);
  double change = 1;
  constexpr int kMaxIterations = 100000;
  for (int it = 0; it < kMaxIterations; ++it) {
    double scale = 0;
    for (std::size_t k = 0; k < r; ++k) {
      double s = 0;
      for (std::size_t j = 0; j < r; ++j) s += m[k * r + j] * x[j];
      y[k] = s;
      scale = std::max(scale, std::abs(s));
    }
    if (scale == 0) throw NumericError("fusion matrices sum to zero", 1.0);
    change = 0;
    for (std::size_t k = 0; k < r; ++k) {
      y[k] /= scale;
      change = std::max(change, std::abs(y[k] - x[k]));
    }
    x.swap(y);
    if (change < tol * 1e-4) return x;
  }
  std::ostringstream os;
  os << "power iteration did not converge (last change " << change << ")";
  throw NumericError(os.str(), change);
}

double eigen_residual(const BasedRing& ring, Index i, const std::vector<double>& d, double lambda) {
  const std::size_t r = ring.rank();
  double worst = 0, norm = 0;
  for (std::size_t j = 0; j < r; ++j) {
    double s = 0;
    for (std::size_t k = 0; k < r; ++k) s += static_cast<double>(ring(i, j, k)) * d[k];
    worst = std::max(worst, std::abs(s - lambda * d[j]));
    norm = std::max(norm, std::abs(d[j]));
  }
  return worst / (std::max(1.0, std::abs(lambda)) * norm);
}

}  // namespace

DimensionData fp_dims(const BasedRing& ring, const Tolerances& tol) {
  const std::size_t r = ring.rank();
  std::vector<double> v = perron_vector(ring, tol.tol);
  const double base = v[ring.unit()];
  if (!(base > 0)) throw NumericError("Perron vector vanishes at the unit", 1.0);
  for (double& x : v) x /= base;

  DimensionData out;
  out.dims.resize(r);
  for (Index i = 0; i < r; ++i) {
    const double d = v[i];
    const double res = eigen_residual(ring, i, v, d);
    out.residual = std::max(out.residual, res);
    if (res > tol.tol) {
      std::ostringstream os;
      os << "dimension of " << ring.labels()[i] << " not certified (residual " << res << ")";
      throw NumericError(os.str(), res);
    }
    Dimension& dim = out.dims[i];
    dim.value = d;
    if (i == ring.unit()) {
      dim = {1.0, Integrality::integer, 1};
      continue;
    }
    const IntMatrix fm = fusion_matrix(ring, i);
    const double rounded = std::round(d);
    const double sq = std::round(d * d);
    if (std::abs(d - rounded) < tol.snap &&
        is_integer_eigenvalue(fm, static_cast<std::int64_t>(rounded))) {
      const auto n = static_cast<std::int64_t>(rounded);
      dim = {static_cast<double>(n), Integrality::integer, n * n};
    } else if (std::abs(d * d - sq) < tol.snap &&
               is_integer_eigenvalue(fm * fm, static_cast<std::int64_t>(sq))) {
      const auto s = static_cast<std::int64_t>(sq);
      dim = {std::sqrt(static_cast<double>(s)), Integrality::sqrt_integer, s};
    }
  }
  const IndexSet all = full_index_set(r);
  out.total = out.dimension_of(ring, all);
  out.total_exact = out.exact_dimension_of(ring, all);
  if (out.total_exact) out.total = static_cast<double>(*out.total_exact);
  return out;
}

}  // namespace fusionkit
