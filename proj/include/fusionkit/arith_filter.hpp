#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/based_ring.hpp"
#include "fusionkit/dimensions.hpp"
#include "fusionkit/verdict.hpp"

namespace fusionkit {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Trial division; factorize(1) is empty. Throws DomainError on 0.
std::vector<PrimePower> factorize(std::uint64_t n);

bool is_square(std::uint64_t n);

struct SquarefreeSplit {
  std::uint64_t squarefree = 1;   // product of primes dividing n exactly once
  std::uint64_t square_part = 1;  // n / squarefree
};

SquarefreeSplit squarefree_split(std::uint64_t n);

/// One (d_i^2, n_i) pair of a category type. Integral entries have a
/// perfect-square `dim_squared`.
struct TypeEntry {
  std::uint64_t dim_squared = 1;
  std::uint64_t multiplicity = 1;
  auto operator<=>(const TypeEntry&) const = default;
};

/// Type (d_1, n_1; ...; d_r, n_r) of a category, sorted by dimension with d_1 = 1.
class CategoryType {
 public:
  /// Sorts entries, merges equal dimensions and checks d_1 = 1 and n_i >= 1.
  /// Throws DomainError when the entries do not form a valid type.
  explicit CategoryType(std::vector<TypeEntry> entries);
  /// Integral type from (d_i, n_i) pairs.
  static CategoryType from_dims(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& dn);

  const std::vector<TypeEntry>& entries() const { return entries_; }
  std::uint64_t total() const { return total_; }
  SquarefreeSplit split() const { return split_; }
  bool integral() const;
  /// d of an integral entry.
  static std::uint64_t dim(const TypeEntry& e);
  std::string to_string() const;

  auto operator<=>(const CategoryType& rhs) const { return entries_ <=> rhs.entries_; }
  bool operator==(const CategoryType& rhs) const { return entries_ == rhs.entries_; }

 private:
  std::vector<TypeEntry> entries_;
  std::uint64_t total_ = 0;
  SquarefreeSplit split_;
};

/// Type of a weakly-integral ring: its simples grouped by dimension.
CategoryType type_of(const DimensionData& dims);

Verdict check_unit_part(const CategoryType& t);
/// Requires an integral type: d_i^2 | N and gcd(d_i, N_1) = 1 for d_i > 1.
Verdict check_coprime_squares(const CategoryType& t);
/// N_1 | n_1, when gcd(N_1, d_i) = 1 for all d_i > 1.
Verdict check_pointed_multiple(const CategoryType& t);
/// n_1 | n_i d_i^2 (invertibles act freely enough on each dimension stratum).
Verdict check_orbit(const CategoryType& t);
/// d_i^2 | N for all i.
Verdict check_square_divides(const CategoryType& t);

/// Nilpotent non-pointed integral commutative ring: dim(C_ad) has trivial
/// square-free part and N_1 divides the order of the universal grading group.
Verdict check_nilpotent_adjoint(const BasedRing& ring, const DimensionData& dims);

struct ThreeSquareShape {
  std::uint64_t p, q, r, d;
  bool operator==(const ThreeSquareShape&) const = default;
};

/// N = p^2 q^2 r^2 d with primes p < q < r and d square-free, coprime to pqr.
std::optional<ThreeSquareShape> detect_three_square_shape(std::uint64_t n);

struct FilterFlags {
  bool square_divides = false;  // d_i^2 | N (integral modular)
  bool unit_part = false;
  bool coprime_squares = false;
  bool pointed_multiple = false;
  bool orbit = false;  // optional, off in all()
  bool weakly_integral = false;  // enumerate d_i^2 over all integers >= 2

  static FilterFlags none() { return {}; }
  static FilterFlags all() { return {true, true, true, true, false, false}; }
};

struct Candidate {
  CategoryType type;
  std::vector<std::string> passed;  // names of every filter this type satisfies
};

/// Depth-first enumeration of types of total N in lexicographic order, with
/// the enabled filters applied as pruning predicates. Throws SizeError when
/// N exceeds `cap`.
std::vector<Candidate> enumerate_types(std::uint64_t n, const FilterFlags& flags,
                                       std::uint64_t cap = 1'000'000);

/// Every check applicable to a type, in a fixed order.
std::vector<Verdict> check_type(const CategoryType& t, bool integral_modular);

}  // namespace fusionkit
