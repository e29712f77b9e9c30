#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fusionkit/based_ring.hpp"
#include "fusionkit/dimensions.hpp"

namespace fusionkit {

using Complex = std::complex<double>;

/// Algebra homomorphisms mu_j of a commutative based ring.
///
/// values(j, i) = mu_j(b_i). Row 0 is the Frobenius-Perron homomorphism;
/// the remaining rows are sorted in descending lexicographic order of their
/// (real, imaginary) entries, so the table does not depend on the random
/// coefficients used to find it.
struct CharacterTable {
  Eigen::MatrixXcd values;
  std::size_t fp_index = 0;
  std::vector<double> codegrees;
  std::vector<double> class_dims;
  double total = 0;
  std::uint64_t seed = 0;
  int attempts = 0;

  std::size_t size() const { return static_cast<std::size_t>(values.rows()); }
  Complex operator()(std::size_t j, Index i) const { return values(j, i); }
};

struct TableOptions {
  std::uint64_t seed = 271828;
  double tol = 1e-9;
  int max_retries = 8;
};

/// Simultaneous eigenvectors of the fusion matrices via one generic random
/// combination sum_i t_i N_i. Throws PreconditionError for a non-commutative
/// ring and NumericError when eigenvalues keep colliding or the resulting
/// rows fail the homomorphism check.
CharacterTable compute_table(const BasedRing& ring, const DimensionData& dims,
                             const TableOptions& options = {});

/// c_j = sum_i mu_j(b_i) mu_j(b_{i*}) / N_{i i*}^{unit}. The weight is 1 on
/// fusion rings; on group class algebras it makes c_j = |G| / chi(1)^2.
double codegree(const BasedRing& ring, const CharacterTable& table, std::size_t j);

struct TableResiduals {
  double homomorphism = 0;
  double orthogonality = 0;
  double class_dim_sum = 0;
  double fp_row = 0;
};

TableResiduals certify(const BasedRing& ring, const DimensionData& dims,
                       const CharacterTable& table);

/// Row-permutation equality within `tol`; also requires matching fp rows.
bool rows_equal_up_to_permutation(const CharacterTable& a, const CharacterTable& b, double tol);

/// Abelian normalized hypergroup on the homomorphisms: mu_a * mu_b is the
/// pointwise product of the normalized rows mu(b_i)/d_i, expanded back in
/// the row basis as sum_c p_{ab}^c mu_c.
struct DualHypergroup {
  std::size_t size = 0;
  std::vector<double> p;
  bool nonnegative = false;
  double expansion_residual = 0;  // reconstruction error of the expansion
  double imaginary_residual = 0;  // largest discarded imaginary part

  double operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return p[(a * size + b) * size + c];
  }
};

DualHypergroup dual_hypergroup(const BasedRing& ring, const DimensionData& dims,
                               const CharacterTable& table, double tol = 1e-9);

struct BurnsideEntry {
  Index simple = 0;
  bool invertible = false;
  bool has_zero = false;
  std::optional<std::size_t> zero_at;
};

struct BurnsideReport {
  std::vector<BurnsideEntry> entries;
  bool holds = true;
};

/// Burnside's vanishing property: a simple is non-invertible iff its
/// character vanishes at some mu_j (|mu_j(b_i)| < zero_tol).
BurnsideReport burnside_check(const BasedRing& ring, const CharacterTable& table,
                              double zero_tol = 1e-7);

}  // namespace fusionkit
