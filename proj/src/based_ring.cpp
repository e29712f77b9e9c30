#include "fusionkit/based_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fusionkit/error.hpp"
#include "fusionkit/kernels.hpp"

namespace fusionkit {

std::string_view to_string(Profile p) { return p == Profile::fusion ? "fusion" : "based"; }

Profile profile_from_string(std::string_view s) {
  if (s == "fusion") return Profile::fusion;
  if (s == "based") return Profile::based;
  throw ParseError("unknown profile '" + std::string(s) + "' (expected based|fusion)");
}

BasedRing::BasedRing(std::vector<std::string> labels, std::vector<std::int64_t> constants,
                     std::vector<Index> dual, Index unit)
    : labels_(std::move(labels)), n_(std::move(constants)), dual_(std::move(dual)), unit_(unit) {
  const std::size_t r = labels_.size();
  if (r == 0) throw StructuralError("ring must have positive rank");
  if (n_.size() != r * r * r) {
    std::ostringstream os;
    os << "structure constants have " << n_.size() << " entries, expected rank^3 = " << r * r * r;
    throw StructuralError(os.str());
  }
  if (dual_.size() != r) throw StructuralError("dual map length differs from rank");
  for (Index d : dual_)
    if (d >= r) throw StructuralError("dual map entry out of range");
  if (unit_ >= r) throw StructuralError("unit index out of range");
}

BasedRing BasedRing::trivial() { return BasedRing({"1"}, {1}, {0}, 0); }

bool BasedRing::is_commutative() const {
  const std::size_t r = rank();
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        if ((*this)(i, j, k) != (*this)(j, i, k)) return false;
  return true;
}

IndexSet BasedRing::product_support(Index i, Index j) const {
  IndexSet out;
  for (Index k = 0; k < rank(); ++k)
    if ((*this)(i, j, k) > 0) out.push_back(k);
  return out;
}

Index BasedRing::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw StructuralError("unknown basis label '" + std::string(label) + "'");
  return static_cast<Index>(it - labels_.begin());
}

BasedRing BasedRing::permuted(std::span<const Index> perm) const {
  const std::size_t r = rank();
  if (perm.size() != r) throw StructuralError("permutation length differs from rank");
  std::vector<Index> inverse(r, r);
  for (Index p = 0; p < r; ++p) {
    if (perm[p] >= r || inverse[perm[p]] != r) throw StructuralError("not a permutation");
    inverse[perm[p]] = p;
  }
  std::vector<std::string> labels(r);
  std::vector<std::int64_t> n(r * r * r);
  std::vector<Index> dual(r);
  for (Index a = 0; a < r; ++a) {
    labels[a] = labels_[perm[a]];
    dual[a] = inverse[dual_[perm[a]]];
    for (Index b = 0; b < r; ++b)
      for (Index c = 0; c < r; ++c) n[(a * r + b) * r + c] = (*this)(perm[a], perm[b], perm[c]);
  }
  return BasedRing(std::move(labels), std::move(n), std::move(dual), inverse[unit_]);
}

namespace {

std::string triple(const BasedRing& ring, Index i, Index j, Index k) {
  const auto& l = ring.labels();
  return "N[" + l[i] + "," + l[j] + "->" + l[k] + "]";
}

}  // namespace

ValidationReport validate(const BasedRing& ring, Profile profile) {
  ValidationReport report;
  report.profile = profile;
  const std::size_t r = ring.rank();
  const Index u = ring.unit();
  auto add = [&](std::string axiom, std::string detail) {
    report.violations.push_back({std::move(axiom), std::move(detail)});
  };

  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        if (ring(i, j, k) < 0)
          add("non-negativity", triple(ring, i, j, k) + " = " + std::to_string(ring(i, j, k)));

  for (Index j = 0; j < r; ++j)
    for (Index k = 0; k < r; ++k) {
      const std::int64_t want = j == k ? 1 : 0;
      if (ring(u, j, k) != want)
        add("unit-left", triple(ring, u, j, k) + " = " + std::to_string(ring(u, j, k)));
      if (ring(j, u, k) != want)
        add("unit-right", triple(ring, j, u, k) + " = " + std::to_string(ring(j, u, k)));
    }

  const auto assoc = kernels::associativity(ring, kernels::Mode::parallel);
  report.associativity_failures = assoc.failures;
  for (const auto& [i, j, k, l] : assoc.first) {
    std::int64_t lhs = 0, rhs = 0;
    for (Index m = 0; m < r; ++m) {
      lhs += ring(i, j, m) * ring(m, k, l);
      rhs += ring(j, k, m) * ring(i, m, l);
    }
    const auto& lb = ring.labels();
    add("associativity", "(" + lb[i] + "*" + lb[j] + ")*" + lb[k] + " has " + std::to_string(lhs) +
                             " copies of " + lb[l] + ", " + lb[i] + "*(" + lb[j] + "*" + lb[k] +
                             ") has " + std::to_string(rhs));
  }
  if (assoc.failures > assoc.first.size())
    add("associativity", std::to_string(assoc.failures - assoc.first.size()) +
                             " further failing identities not listed");

  for (Index i = 0; i < r; ++i) {
    const Index d = ring.dual(i);
    if (ring.dual(d) != i) add("duality", "dual is not an involution at " + ring.labels()[i]);
  }
  if (ring.dual(u) != u) add("duality", "dual(unit) != unit");
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      const std::int64_t v = ring(i, j, u);
      if (j == ring.dual(i)) {
        if (v < 1) add("duality", triple(ring, i, j, u) + " must be >= 1");
        else if (profile == Profile::fusion && v != 1)
          add("fusion-norm", triple(ring, i, j, u) + " = " + std::to_string(v) + ", expected 1");
      } else if (v != 0) {
        add("duality", triple(ring, i, j, u) + " = " + std::to_string(v) + " but " +
                           ring.labels()[j] + " is not the dual of " + ring.labels()[i]);
      }
    }
  return report;
}

IntMatrix fusion_matrix(const BasedRing& ring, Index i) {
  if (i >= ring.rank()) throw DomainError("basis index out of range");
  const std::size_t r = ring.rank();
  IntMatrix m(r);
  for (Index k = 0; k < r; ++k)
    for (Index j = 0; j < r; ++j) m(k, j) = ring(i, j, k);
  return m;
}

IndexSet invertibles(const BasedRing& ring) {
  IndexSet out;
  for (Index i = 0; i < ring.rank(); ++i) {
    const Index d = ring.dual(i);
    bool ok = true;
    for (Index k = 0; k < ring.rank() && ok; ++k)
      ok = ring(i, d, k) == (k == ring.unit() ? 1 : 0);
    if (ok) out.push_back(i);
  }
  return out;
}

IndexSet full_index_set(std::size_t rank) {
  IndexSet out(rank);
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

IndexSet subring_closure(const BasedRing& ring, const IndexSet& seed) {
  const std::size_t r = ring.rank();
  std::vector<char> in(r, 0);
  in[ring.unit()] = 1;
  for (Index s : seed) {
    if (s >= r) throw DomainError("seed index out of range");
    in[s] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index i = 0; i < r; ++i) {
      if (!in[i]) continue;
      if (!in[ring.dual(i)]) in[ring.dual(i)] = 1, changed = true;
      for (Index j = 0; j < r; ++j) {
        if (!in[j]) continue;
        for (Index k = 0; k < r; ++k)
          if (!in[k] && ring(i, j, k) > 0) in[k] = 1, changed = true;
      }
    }
  }
  IndexSet out;
  for (Index i = 0; i < r; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

IndexSet adjoint_subring(const BasedRing& ring, const IndexSet& within) {
  IndexSet seed;
  for (Index i : within)
    for (Index k : ring.product_support(i, ring.dual(i))) seed.push_back(k);
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return subring_closure(ring, seed);
}

IndexSet adjoint_subring(const BasedRing& ring) {
  return adjoint_subring(ring, full_index_set(ring.rank()));
}

GradingData universal_grading(const BasedRing& ring) {
  const std::size_t r = ring.rank();
  GradingData g;
  g.adjoint = adjoint_subring(ring);

  std::vector<Index> parent(r);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index a : g.adjoint)
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j)
        if (ring(a, i, j) > 0) parent[find(i)] = find(j);

  // Number components by their smallest member so the unit's component is 0.
  std::vector<std::size_t> label(r, r);
  g.class_of.assign(r, 0);
  for (Index i = 0; i < r; ++i) {
    const Index root = find(i);
    if (label[root] == r) {
      label[root] = g.classes.size();
      g.classes.emplace_back();
    }
    g.class_of[i] = label[root];
    g.classes[label[root]].push_back(i);
  }
  if (g.class_of[ring.unit()] != 0) {
    // Unit is not index 0; move its component to the front.
    const std::size_t uc = g.class_of[ring.unit()];
    std::swap(g.classes[0], g.classes[uc]);
    for (auto& c : g.class_of) c = c == uc ? 0 : (c == 0 ? uc : c);
  }

  g.order = g.classes.size();
  const std::size_t none = g.order;
  g.group_table.assign(g.order * g.order, none);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        if (ring(i, j, k) == 0) continue;
        auto& slot = g.group_table[g.class_of[i] * g.order + g.class_of[j]];
        if (slot == none) slot = g.class_of[k];
        else if (slot != g.class_of[k])
          throw PreconditionError("grading product is not single-valued for components of " +
                                  ring.labels()[i] + " and " + ring.labels()[j]);
      }

  for (std::size_t a = 0; a < g.order; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < g.order; ++b) {
      if (g.product(0, b) != b || g.product(b, 0) != b)
        throw PreconditionError("adjoint component is not a unit for the grading");
      if (g.product(a, b) == 0 && g.product(b, a) == 0) has_inverse = true;
      for (std::size_t c = 0; c < g.order; ++c)
        if (g.product(g.product(a, b), c) != g.product(a, g.product(b, c)))
          throw PreconditionError("grading product is not associative");
    }
    if (!has_inverse) throw PreconditionError("grading component without inverse");
  }
  return g;
}

NilpotencyData is_nilpotent(const BasedRing& ring) {
  NilpotencyData out;
  out.chain.push_back(full_index_set(ring.rank()));
  const IndexSet trivial{ring.unit()};
  while (out.chain.back() != trivial) {
    IndexSet next = adjoint_subring(ring, out.chain.back());
    if (next == out.chain.back()) return out;
    out.chain.push_back(std::move(next));
  }
  out.nilpotent = true;
  return out;
}

}  // namespace fusionkit
