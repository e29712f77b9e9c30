#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fusionkit/based_ring.hpp"
#include "fusionkit/char_table.hpp"
#include "fusionkit/exact.hpp"
#include "fusionkit/kernels.hpp"
#include "fusionkit/verdict.hpp"

namespace fusionkit {

using Permutation = kernels::Permutation;

/// Parses cycle notation such as "(0 1 2)(3 4)" or "()" on {0..degree-1}.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Validates one-line notation (image list) as a permutation.
Permutation checked_permutation(std::vector<std::uint32_t> images);

/// (a*b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);

/// A finite group as an explicit multiplication table.
struct CayleyTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> mul;  // order x order, row-major
  std::vector<std::uint32_t> inv;
  std::uint32_t identity = 0;

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[a * order + b]; }

  /// Validates closure, identity, inverses and associativity (exhaustive).
  /// Throws StructuralError when the table is not a group.
  static CayleyTable from_table(std::size_t order, std::vector<std::uint32_t> mul);
};

struct GroupOptions {
  std::size_t closure_cap = 10000;
  kernels::Mode mode = kernels::Mode::parallel;
};

/// Closure of the generators under composition. Elements are numbered
/// breadth-first from the identity, multiplying on the right by the
/// generators in the given order. Throws SizeError past the cap.
CayleyTable cayley_from_generators(std::span<const Permutation> generators,
                                   const GroupOptions& options = {});

/// Conjugacy classes with class-algebra constants.
struct ClassData {
  std::size_t order = 0;
  std::vector<std::vector<std::uint32_t>> classes;  // classes[0] = {identity}
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> class_of;       // element -> class
  std::vector<std::size_t> inverse_class;  // (C^j)^{-1} = C^{inverse_class[j]}
  std::vector<std::uint32_t> commutator;   // sorted elements of G'
  std::vector<std::int64_t> constants;     // a_{ijk}, flattened m^3

  std::size_t count() const { return classes.size(); }
  std::int64_t a(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[(i * count() + j) * count() + k];
  }
  /// Classes contained in G'.
  std::vector<std::size_t> commutator_classes() const;
};

/// Conjugation orbits (numbered by smallest member, identity first), the
/// commutator subgroup, and the constants a_{ijk}. Each a_{ijk} is computed
/// for two representatives of C^k when |C^k| > 1 and must agree.
ClassData class_data(const CayleyTable& table, kernels::Mode mode = kernels::Mode::parallel);

/// An element of the rational class algebra, by class-sum coefficients.
using ClassVector = std::vector<Rational>;

ClassVector multiply(const ClassData& cd, const ClassVector& x, const ClassVector& y);

/// P = prod_j C_j / |C^j|, multiplied in class order.
ClassVector normalized_class_product(const ClassData& cd);

struct GroupHaradaReport {
  ClassVector lhs;  // P^2
  ClassVector rhs;  // (1/|G'|) sum_{C^j in G'} C_j
  std::size_t commutator_order = 0;
  std::optional<std::size_t> mismatch;  // first class where they differ
  Verdict verdict;
};

/// Exact check of (prod_j C_j/|C^j|)^2 = (1/|G'|) sum_{C^j in G'} C_j.
GroupHaradaReport verify_harada_group(const ClassData& cd);

/// Class algebra as a based ring: basis = class sums, unit = class 0,
/// dual = inverse class.
BasedRing class_algebra_as_ring(const ClassData& cd);

/// prod_j C_j in the integral group ring Z[G] (coefficients per element).
std::vector<BigInt> group_ring_class_product(const CayleyTable& table, const ClassData& cd,
                                             kernels::Mode mode = kernels::Mode::parallel);

/// Compares P from the class algebra against the direct product in Z[G]
/// (divided by prod |C^j|). Throws SizeError when |G| exceeds `cap`.
Verdict group_ring_oracle(const CayleyTable& table, const ClassData& cd, std::size_t cap = 500);

/// The support of prod_j C_j in Z[G] is a single coset of G'.
Verdict coset_property(const CayleyTable& table, const ClassData& cd, std::size_t cap = 500);

/// Irreducible characters of G recovered from the table of the class
/// algebra: chi(1)^2 = |G| / c_chi and chi(g_i) = mu_chi(C_i) chi(1) / |C_i|.
struct GroupCharacters {
  std::vector<std::int64_t> degrees;
  Eigen::MatrixXcd values;  // (irrep, class)
};

GroupCharacters group_characters(const ClassData& cd, const CharacterTable& class_table,
                                 double snap = 1e-6);

/// Representation ring Rep(G) as a fusion ring, with multiplicities
/// <chi_a chi_b, chi_c> rounded from the characters and checked to be
/// within `snap` of integers. Irreps are ordered by degree, then by the
/// class-algebra table order.
BasedRing representation_ring(const ClassData& cd, const GroupCharacters& chars,
                              double snap = 1e-6);

}  // namespace fusionkit
