#include "fusionkit/arith_filter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor 0");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) n /= p, ++e;
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_square(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

SquarefreeSplit squarefree_split(std::uint64_t n) {
  SquarefreeSplit s;
  for (const auto& [p, e] : factorize(n))
    if (e == 1) s.squarefree *= p;
  s.square_part = n / s.squarefree;
  return s;
}

CategoryType::CategoryType(std::vector<TypeEntry> entries) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& e : entries) {
    if (e.dim_squared == 0) throw DomainError("type entry with dimension 0");
    if (e.multiplicity == 0) throw DomainError("type entry with multiplicity 0");
    merged[e.dim_squared] += e.multiplicity;
  }
  if (merged.empty() || merged.begin()->first != 1)
    throw DomainError("type must contain dimension 1 (d_1 = 1, n_1 >= 1)");
  for (const auto& [s, n] : merged) {
    entries_.push_back({s, n});
    total_ += s * n;
  }
  split_ = squarefree_split(total_);
}

CategoryType CategoryType::from_dims(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& dn) {
  std::vector<TypeEntry> entries;
  for (auto [d, n] : dn) entries.push_back({d * d, n});
  return CategoryType(std::move(entries));
}

bool CategoryType::integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TypeEntry& e) { return is_square(e.dim_squared); });
}

std::uint64_t CategoryType::dim(const TypeEntry& e) { return isqrt(e.dim_squared); }

std::string CategoryType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (i) os << "; ";
    if (is_square(e.dim_squared)) os << dim(e);
    else os << "sqrt" << e.dim_squared;
    os << "," << e.multiplicity;
  }
  os << ")";
  return os.str();
}

CategoryType type_of(const DimensionData& dims) {
  std::vector<TypeEntry> entries;
  for (const auto& d : dims.dims) {
    if (d.kind == Integrality::other) throw DomainError("type needs weakly-integral dimensions");
    entries.push_back({static_cast<std::uint64_t>(d.square), 1});
  }
  return CategoryType(std::move(entries));
}

Verdict check_unit_part(const CategoryType& t) {
  const auto n1 = t.split().squarefree;
  for (const auto& e : t.entries())
    if (e.multiplicity % n1 != 0)
      return make_verdict("unit-part", false,
                          "N_1 = " + std::to_string(n1) + " does not divide n = " +
                              std::to_string(e.multiplicity));
  return make_verdict("unit-part", true, "N_1 = " + std::to_string(n1) + " divides every n_i");
}

Verdict check_square_divides(const CategoryType& t) {
  for (const auto& e : t.entries())
    if (t.total() % e.dim_squared != 0)
      return make_verdict("square-divides", false,
                          "d^2 = " + std::to_string(e.dim_squared) + " does not divide N = " +
                              std::to_string(t.total()));
  return make_verdict("square-divides", true);
}

Verdict check_coprime_squares(const CategoryType& t) {
  if (!t.integral()) return not_applicable("coprime-squares", "type is not integral");
  const auto n1 = t.split().squarefree;
  for (const auto& e : t.entries()) {
    if (e.dim_squared == 1) continue;
    const auto d = CategoryType::dim(e);
    if (t.total() % e.dim_squared != 0)
      return make_verdict("coprime-squares", false,
                          "d^2 = " + std::to_string(e.dim_squared) + " does not divide N");
    if (gcd_u64(d, n1) != 1)
      return make_verdict("coprime-squares", false,
                          "gcd(" + std::to_string(d) + ", N_1) != 1");
  }
  return make_verdict("coprime-squares", true);
}

Verdict check_pointed_multiple(const CategoryType& t) {
  const auto n1 = t.split().squarefree;
  for (const auto& e : t.entries())
    if (e.dim_squared > 1 && gcd_u64(e.dim_squared, n1) != 1)
      return not_applicable("pointed-multiple", "N_1 shares a prime with d^2 = " + std::to_string(e.dim_squared));
  const auto first = t.entries().front().multiplicity;
  return make_verdict("pointed-multiple", first % n1 == 0,
                      "N_1 = " + std::to_string(n1) + ", n_1 = " + std::to_string(first));
}

Verdict check_orbit(const CategoryType& t) {
  const auto n1 = t.entries().front().multiplicity;
  for (const auto& e : t.entries())
    if ((e.multiplicity * e.dim_squared) % n1 != 0)
      return make_verdict("orbit", false,
                          "n_1 = " + std::to_string(n1) + " does not divide n_i d_i^2 = " +
                              std::to_string(e.multiplicity * e.dim_squared));
  return make_verdict("orbit", true);
}

Verdict check_nilpotent_adjoint(const BasedRing& ring, const DimensionData& dims) {
  const std::string name = "nilpotent.adjoint";
  if (!ring.is_commutative()) return not_applicable(name, "ring is not commutative");
  if (!dims.integral() || !dims.total_exact) return not_applicable(name, "ring is not integral");
  if (invertibles(ring).size() == ring.rank()) return not_applicable(name, "ring is pointed");
  if (!is_nilpotent(ring).nilpotent) return not_applicable(name, "ring is not nilpotent");

  const auto ad = dims.exact_dimension_of(ring, adjoint_subring(ring));
  const auto grading = universal_grading(ring);
  const auto n1 = squarefree_split(static_cast<std::uint64_t>(*dims.total_exact)).squarefree;
  const auto ad_split = squarefree_split(static_cast<std::uint64_t>(*ad));
  const bool ok = ad_split.squarefree == 1 && grading.order % n1 == 0 &&
                  static_cast<std::int64_t>(grading.order) * *ad == *dims.total_exact;
  std::ostringstream os;
  os << "dim(C_ad) = " << *ad << " (square-free part " << ad_split.squarefree << "), |U(C)| = "
     << grading.order << ", N_1 = " << n1;
  return make_verdict(name, ok, os.str());
}

std::optional<ThreeSquareShape> detect_three_square_shape(std::uint64_t n) {
  if (n == 0) return std::nullopt;
  std::vector<std::uint64_t> squared;
  std::uint64_t d = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e == 2) squared.push_back(p);
    else if (e == 1) d *= p;
    else return std::nullopt;
  }
  if (squared.size() != 3) return std::nullopt;
  return ThreeSquareShape{squared[0], squared[1], squared[2], d};
}

namespace {

struct Enumerator {
  std::uint64_t n;
  FilterFlags flags;
  std::uint64_t n1;
  std::vector<std::uint64_t> squares;  // candidate d^2 > 1, ascending

  bool entry_ok(std::uint64_t s) const {
    if (flags.weakly_integral) return true;
    if ((flags.square_divides || flags.coprime_squares) && n % s != 0) return false;
    if (flags.coprime_squares && gcd_u64(isqrt(s), n1) != 1) return false;
    return true;
  }

  bool leaf_ok(const CategoryType& t) const {
    if (flags.unit_part && t.entries().front().multiplicity % n1 != 0) return false;
    if (flags.weakly_integral) return true;
    if (flags.pointed_multiple && check_pointed_multiple(t).failed()) return false;
    if (flags.orbit && check_orbit(t).failed()) return false;
    return true;
  }

  void dfs(std::size_t from, std::uint64_t remaining, std::vector<TypeEntry>& chosen,
           std::vector<CategoryType>& out) const {
    std::vector<TypeEntry> entries{{1, remaining}};
    entries.insert(entries.end(), chosen.begin(), chosen.end());
    CategoryType t(std::move(entries));
    if (leaf_ok(t)) out.push_back(std::move(t));
    for (std::size_t si = from; si < squares.size(); ++si) {
      const std::uint64_t s = squares[si];
      if (s >= remaining) break;
      if (!entry_ok(s)) continue;
      for (std::uint64_t m = 1; m * s < remaining; ++m) {
        if (flags.unit_part && m % n1 != 0) continue;
        chosen.push_back({s, m});
        dfs(si + 1, remaining - m * s, chosen, out);
        chosen.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Candidate> enumerate_types(std::uint64_t n, const FilterFlags& flags, std::uint64_t cap) {
  if (n == 0) throw DomainError("dimension must be positive");
  if (n > cap) throw SizeError("N = " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  Enumerator e{n, flags, squarefree_split(n).squarefree, {}};
  for (std::uint64_t k = 2;; ++k) {
    const std::uint64_t s = flags.weakly_integral ? k : k * k;
    if (s >= n) break;
    e.squares.push_back(s);
  }

  // Top-level branches (first non-unit entry) are independent subtrees.
  struct Branch {
    std::size_t index;
    std::uint64_t mult;
  };
  std::vector<Branch> branches;
  for (std::size_t si = 0; si < e.squares.size(); ++si) {
    if (!e.entry_ok(e.squares[si])) continue;
    for (std::uint64_t m = 1; m * e.squares[si] < n; ++m)
      if (!flags.unit_part || m % e.n1 == 0) branches.push_back({si, m});
  }
  std::vector<std::vector<CategoryType>> found(branches.size() + 1);
  {
    const std::vector<TypeEntry> unit_only{{1, n}};
    CategoryType t(unit_only);
    if (e.leaf_ok(t)) found.back().push_back(std::move(t));
  }
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(branches.size()); ++b) {
    const auto& br = branches[static_cast<std::size_t>(b)];
    std::vector<TypeEntry> chosen{{e.squares[br.index], br.mult}};
    e.dfs(br.index + 1, n - br.mult * e.squares[br.index], chosen, found[static_cast<std::size_t>(b)]);
  }

  std::vector<CategoryType> all;
  for (auto& f : found)
    for (auto& t : f) all.push_back(std::move(t));
  std::sort(all.begin(), all.end());

  std::vector<Candidate> out;
  out.reserve(all.size());
  for (auto& t : all) {
    Candidate c{std::move(t), {}};
    for (const Verdict& v : {check_square_divides(c.type), check_unit_part(c.type),
                             check_coprime_squares(c.type), check_pointed_multiple(c.type), check_orbit(c.type)})
      if (v.passed()) c.passed.push_back(v.check);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Verdict> check_type(const CategoryType& t, bool integral_modular) {
  std::vector<Verdict> out;
  out.push_back(check_unit_part(t));
  if (integral_modular) {
    out.push_back(check_square_divides(t));
    out.push_back(check_coprime_squares(t));
  } else {
    out.push_back(not_applicable("square-divides", "type is not flagged integral modular"));
    out.push_back(not_applicable("coprime-squares", "type is not flagged integral modular"));
  }
  out.push_back(check_pointed_multiple(t));
  if (const auto shape = detect_three_square_shape(t.total())) {
    std::ostringstream os;
    os << "N = " << shape->p << "^2*" << shape->q << "^2*" << shape->r << "^2*" << shape->d
       << "; an integral modular category of this dimension is weakly group-theoretical,"
       << " a Deligne product of a pointed factor of dimension " << shape->d
       << " and a factor of dimension " << shape->p * shape->p * shape->q * shape->q * shape->r * shape->r;
    out.push_back(Verdict{"shape.p2q2r2d", Outcome::pass, std::nullopt, true, os.str()});
  } else {
    out.push_back(not_applicable("shape.p2q2r2d", "N is not of the form p^2 q^2 r^2 d"));
  }
  return out;
}

}  // namespace fusionkit
