#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fusionkit/based_ring.hpp"

namespace fusionkit {

struct Tolerances {
  double tol = 1e-9;   // relative tolerance for eigen computations
  double snap = 1e-6;  // distance within which values snap to exact ones
};

enum class Integrality { integer, sqrt_integer, other };

struct Dimension {
  double value = 0;
  Integrality kind = Integrality::other;
  // Exact value of d^2 when kind != other.
  std::int64_t square = 0;
};

/// Frobenius-Perron data of a based ring.
///
/// `total` is the trace-form dimension sum_i d_i^2 / N_{i i*}^{unit}. For a
/// fusion ring this is FPdim = sum_i d_i^2; for the class algebra of a group
/// it is |G| (d_i = |C^i| and N_{i i*}^{unit} = |C^i|).
struct DimensionData {
  std::vector<Dimension> dims;
  double total = 0;
  std::optional<std::int64_t> total_exact;
  double residual = 0;  // max relative eigen-residual over fusion matrices

  double operator[](Index i) const { return dims[i].value; }
  std::vector<double> values() const;
  bool weakly_integral() const;
  bool integral() const;
  /// sum over `subset` of d_i^2 / N_{i i*}^{unit}
  double dimension_of(const BasedRing& ring, const IndexSet& subset) const;
  std::optional<std::int64_t> exact_dimension_of(const BasedRing& ring,
                                                 const IndexSet& subset) const;
};

/// Perron-Frobenius dimensions: d_i is the spectral radius of
/// fusion_matrix(i). Values within `snap` of an integer (or of the square
/// root of an integer) are replaced by the exact value after confirming it
/// is an eigenvalue by an exact determinant. Throws NumericError when the
/// iteration does not converge to the requested tolerance.
DimensionData fp_dims(const BasedRing& ring, const Tolerances& tol = {});

}  // namespace fusionkit
