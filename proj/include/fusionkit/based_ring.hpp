#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/exact.hpp"

namespace fusionkit {

using Index = std::size_t;
/// Sorted list of distinct basis indices.
using IndexSet = std::vector<Index>;

/// Which axiom set `validate` enforces. Group class algebras only satisfy
/// the based axioms: N_{i i*}^{unit} is the class size there, not 1.
enum class Profile { based, fusion };

std::string_view to_string(Profile p);
Profile profile_from_string(std::string_view s);

/// Finite-rank based ring over the integers, given by its structure
/// constants N_{ij}^k (b_i b_j = sum_k N_{ij}^k b_k), a unit index and a
/// duality map i -> i*.
///
/// Construction only checks shapes; the algebraic axioms are checked by
/// `validate`. A ring is immutable once built.
class BasedRing {
 public:
  /// `constants` is the flattened rank^3 array indexed [i][j][k].
  /// Throws StructuralError on inconsistent sizes or out-of-range indices.
  BasedRing(std::vector<std::string> labels, std::vector<std::int64_t> constants,
            std::vector<Index> dual, Index unit = 0);

  /// The rank-1 ring Z.
  static BasedRing trivial();

  std::size_t rank() const noexcept { return labels_.size(); }
  Index unit() const noexcept { return unit_; }
  Index dual(Index i) const { return dual_.at(i); }
  const std::vector<Index>& duals() const noexcept { return dual_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const std::int64_t> constants() const noexcept { return n_; }

  std::int64_t operator()(Index i, Index j, Index k) const noexcept {
    return n_[(i * rank() + j) * rank() + k];
  }

  /// N_{i i*}^{unit}: 1 for fusion rings, the class size for class algebras.
  std::int64_t norm(Index i) const noexcept { return (*this)(i, dual_[i], unit_); }

  bool is_commutative() const;
  /// {k : N_{ij}^k > 0}
  IndexSet product_support(Index i, Index j) const;
  /// Throws StructuralError when the label is unknown.
  Index index_of(std::string_view label) const;

  /// Ring with basis reordered so that new index p is old index perm[p].
  BasedRing permuted(std::span<const Index> perm) const;

  bool operator==(const BasedRing&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::int64_t> n_;
  std::vector<Index> dual_;
  Index unit_;
};

struct Violation {
  std::string axiom;
  std::string detail;
};

struct ValidationReport {
  Profile profile = Profile::based;
  std::vector<Violation> violations;
  // Total count per axiom may exceed the number of recorded details.
  std::size_t associativity_failures = 0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks non-negativity, unit law, associativity and duality, plus
/// N_{i i*}^{unit} = 1 under the fusion profile. An empty report means valid.
ValidationReport validate(const BasedRing& ring, Profile profile);

/// Left multiplication by b_i: entry (k, j) is N_{ij}^k.
IntMatrix fusion_matrix(const BasedRing& ring, Index i);

/// Basis elements with b_i b_{i*} = b_unit exactly.
IndexSet invertibles(const BasedRing& ring);

/// Smallest set containing seed and the unit that is closed under duality
/// and under taking product supports.
IndexSet subring_closure(const BasedRing& ring, const IndexSet& seed);

/// Subring generated by the supports of b_i b_{i*}, i in `within`.
IndexSet adjoint_subring(const BasedRing& ring, const IndexSet& within);
IndexSet adjoint_subring(const BasedRing& ring);

struct GradingData {
  IndexSet adjoint;
  std::vector<IndexSet> classes;     // classes[0] contains the unit
  std::vector<Index> class_of;       // basis index -> class
  std::vector<std::size_t> group_table;  // order x order, row-major
  std::size_t order = 0;

  std::size_t product(std::size_t a, std::size_t b) const { return group_table[a * order + b]; }
};

/// Universal grading: components are the orbits of left multiplication by the
/// adjoint subring. Throws PreconditionError when the induced product on
/// components is not a well-defined group (signals invalid fusion data).
GradingData universal_grading(const BasedRing& ring);

struct NilpotencyData {
  bool nilpotent = false;
  // chain[0] is the full basis; each next entry is the adjoint of the last.
  std::vector<IndexSet> chain;
  // Number of adjoint steps taken (the chain length minus one).
  std::size_t steps() const { return chain.empty() ? 0 : chain.size() - 1; }
};

NilpotencyData is_nilpotent(const BasedRing& ring);

IndexSet full_index_set(std::size_t rank);

}  // namespace fusionkit
