#pragma once

#include <complex>
#include <vector>

#include "fusionkit/based_ring.hpp"
#include "fusionkit/char_table.hpp"
#include "fusionkit/dimensions.hpp"
#include "fusionkit/verdict.hpp"

namespace fusionkit {

/// A central element, stored as the scalars by which it acts on each simple.
/// Products are entrywise.
struct CentralElement {
  std::vector<Complex> action;

  static CentralElement unit(std::size_t rank);
  /// sum_{i in set} E_i, where E_i acts by 1 on X_i and 0 elsewhere.
  static CentralElement indicator(std::size_t rank, const IndexSet& set);

  std::size_t size() const { return action.size(); }
  CentralElement operator*(const CentralElement& rhs) const;
  CentralElement operator+(const CentralElement& rhs) const;
  CentralElement operator*(double s) const;
  /// Max entrywise |a - b|, and its coordinate.
  std::pair<double, Index> distance(const CentralElement& rhs) const;
};

/// C_j: acts on X_i by class_dims_j * mu_j(b_i) / d_i.
CentralElement class_sum(const DimensionData& dims, const CharacterTable& table, std::size_t j);

struct SupportData {
  IndexSet subring;
  std::vector<double> lambda_values;  // mu_j(lambda_D), j = 0..m
  std::vector<std::size_t> support;   // {j : mu_j(lambda_D) = 1}
};

/// Support J_D of a closed subring D: the rows where the normalized
/// integral lambda_D = (sum_{i in D} (d_i / N_{i i*}^u) b_i) / dim(D)
/// evaluates to 1. Throws NumericError when some value is not 0 or 1.
SupportData support(const BasedRing& ring, const DimensionData& dims, const CharacterTable& table,
                    const IndexSet& subring, double tol = 1e-7);

/// (prod_j C_j / dim(C^j))^2, i.e. (prod_j mu_j(b_i)/d_i)^2 on X_i.
CentralElement harada_lhs(const DimensionData& dims, const CharacterTable& table);

struct HaradaReport {
  IndexSet invertibles;
  IndexSet pointed;
  std::vector<std::size_t> pointed_support;
  double pointed_dim = 0;
  CentralElement lhs;
  // harada.a, harada.b, harada.c
  std::vector<Verdict> checks;

  bool passed() const;
};

/// Three checks, each with its residual:
///  a) lhs == sum of E_i over invertible simples;
///  b) lhs == dim(C_pt)/dim(C) * sum_{j in J(C_pt)} C_j;
///  c) dim(C)/dim(C_pt) * sum_{invertible} E_i == sum_{j in J(C_pt)} C_j.
/// Requires a commutative fusion-profile ring.
HaradaReport verify_harada(const BasedRing& ring, const DimensionData& dims,
                           const CharacterTable& table, double tol = 1e-7);

/// dim(C)/dim(C_pt) divides prod_j dim(C^j), after snapping to integers.
/// Not applicable when any of those quantities is not an integer.
Verdict check_codegree_divisibility(const BasedRing& ring, const DimensionData& dims,
                                 const CharacterTable& table, double snap = 1e-6);

/// For a ring declared modular: dim(C_ad) = dim(C)/dim(C_pt) divides
/// prod_j d_j^2. Not applicable without the modular flag or with
/// non-weakly-integral dimensions.
Verdict check_modular_divisibility(const BasedRing& ring, const DimensionData& dims,
                                 bool modular);

/// For a ring declared modular the class dimensions must be the squared
/// dimensions of the simples (as multisets).
Verdict check_modular_class_dims(const BasedRing& ring, const DimensionData& dims,
                                 const CharacterTable& table, bool modular, double snap = 1e-6);

}  // namespace fusionkit
