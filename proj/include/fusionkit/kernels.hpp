#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version selected by `Mode`; tests assert they agree and the
// benchmark target compares their timings.

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "fusionkit/based_ring.hpp"
#include "fusionkit/exact.hpp"

namespace fusionkit {
struct CayleyTable;
}

namespace fusionkit::kernels {

enum class Mode { serial, parallel };

using Permutation = std::vector<std::uint32_t>;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

using PermutationIndex = std::unordered_map<Permutation, std::uint32_t, PermutationHash>;

struct AssociativityResult {
  std::size_t failures = 0;
  // Up to `max_recorded` failing (i, j, k, l), in lexicographic order.
  std::vector<std::array<Index, 4>> first;
};

/// Counts (i,j,k,l) with sum_m N_ij^m N_mk^l != sum_m N_jk^m N_im^l.
AssociativityResult associativity(const BasedRing& ring, Mode mode,
                                  std::size_t max_recorded = 8);

/// Full multiplication table of a closed set of permutations, where
/// (a*b)(x) = a(b(x)). `index` maps each element to its position.
std::vector<std::uint32_t> permutation_products(std::span<const Permutation> elements,
                                                const PermutationIndex& index, Mode mode);

/// Class-algebra constants a_{ijk} = #{(x, y) in C^i x C^j : xy = z_k}
/// for the given representatives z_k; flattened m^3 array.
std::vector<std::int64_t> class_constants(const CayleyTable& table,
                                          std::span<const std::size_t> class_of,
                                          std::span<const std::uint32_t> representatives,
                                          Mode mode);

/// Product x*y in the group ring Z[G] or Q[G] (coefficient vectors indexed
/// by group elements).
std::vector<BigInt> convolve(const CayleyTable& table, std::span<const BigInt> x,
                             std::span<const BigInt> y, Mode mode);
std::vector<std::int64_t> convolve(const CayleyTable& table, std::span<const std::int64_t> x,
                                   std::span<const std::int64_t> y, Mode mode);

}  // namespace fusionkit::kernels
