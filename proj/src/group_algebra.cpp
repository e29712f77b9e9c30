#include "fusionkit/group_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<char> moved(degree, 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
      if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("bad character in cycle notation: " + std::string(text));
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
      if (v >= degree) throw ParseError("point " + std::to_string(v) + " exceeds the degree");
      if (moved[v]) throw ParseError("point " + std::to_string(v) + " appears twice");
      moved[v] = 1;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

Permutation checked_permutation(std::vector<std::uint32_t> images) {
  std::vector<char> hit(images.size(), 0);
  for (std::uint32_t x : images) {
    if (x >= images.size() || hit[x]) throw ParseError("image list is not a permutation");
    hit[x] = 1;
  }
  return images;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

CayleyTable CayleyTable::from_table(std::size_t order, std::vector<std::uint32_t> mul) {
  if (order == 0) throw StructuralError("group order must be positive");
  if (mul.size() != order * order) throw StructuralError("Cayley table must have order^2 entries");
  for (auto v : mul)
    if (v >= order) throw StructuralError("Cayley table entry out of range");
  CayleyTable t;
  t.order = order;
  t.mul = std::move(mul);
  bool found = false;
  for (std::uint32_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < order && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
    if (ok) t.identity = e, found = true;
  }
  if (!found) throw StructuralError("Cayley table has no identity");
  t.inv.assign(order, 0);
  for (std::uint32_t a = 0; a < order; ++a) {
    bool ok = false;
    for (std::uint32_t b = 0; b < order && !ok; ++b)
      if (t(a, b) == t.identity && t(b, a) == t.identity) t.inv[a] = b, ok = true;
    if (!ok) throw StructuralError("element " + std::to_string(a) + " has no inverse");
  }
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = 0; b < order; ++b)
      for (std::uint32_t c = 0; c < order; ++c)
        if (t(t(a, b), c) != t(a, t(b, c)))
          throw StructuralError("Cayley table is not associative");
  return t;
}

CayleyTable cayley_from_generators(std::span<const Permutation> generators,
                                   const GroupOptions& options) {
  const std::size_t degree = generators.empty() ? 1 : generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) throw StructuralError("generators act on different domains");
    checked_permutation(g);
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Permutation> elements{id};
  kernels::PermutationIndex index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation y = compose(elements[head], g);
      if (index.contains(y)) continue;
      if (elements.size() >= options.closure_cap)
        throw SizeError("group closure exceeds cap of " + std::to_string(options.closure_cap));
      index.emplace(y, static_cast<std::uint32_t>(elements.size()));
      elements.push_back(std::move(y));
    }
  }

  CayleyTable t;
  t.order = elements.size();
  t.identity = 0;
  t.mul = kernels::permutation_products(elements, index, options.mode);
  t.inv.resize(t.order);
  for (std::uint32_t a = 0; a < t.order; ++a)
    for (std::uint32_t b = 0; b < t.order; ++b)
      if (t(a, b) == 0) {
        t.inv[a] = b;
        break;
      }
  return t;
}

std::vector<std::size_t> ClassData::commutator_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < count(); ++j)
    if (std::binary_search(commutator.begin(), commutator.end(), classes[j].front())) out.push_back(j);
  return out;
}

ClassData class_data(const CayleyTable& table, kernels::Mode mode) {
  const std::size_t n = table.order;
  ClassData cd;
  cd.order = n;
  const std::size_t none = n + 1;
  cd.class_of.assign(n, none);

  auto add_class = [&](std::uint32_t g) {
    std::vector<std::uint32_t> cls;
    for (std::uint32_t h = 0; h < n; ++h) {
      const std::uint32_t c = table(table(h, g), table.inv[h]);
      if (cd.class_of[c] == none) {
        cd.class_of[c] = cd.classes.size();
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    cd.sizes.push_back(cls.size());
    cd.classes.push_back(std::move(cls));
  };
  add_class(table.identity);
  for (std::uint32_t g = 0; g < n; ++g)
    if (cd.class_of[g] == none) add_class(g);

  for (const auto& cls : cd.classes) cd.inverse_class.push_back(cd.class_of[table.inv[cls.front()]]);

  // G' is generated by the set of commutators, which is inverse-closed.
  std::vector<char> is_comm(n, 0);
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h)
      is_comm[table(table(table.inv[g], table.inv[h]), table(g, h))] = 1;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t g = 0; g < n; ++g)
    if (is_comm[g]) gens.push_back(g);
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> sub{table.identity};
  in[table.identity] = 1;
  for (std::size_t head = 0; head < sub.size(); ++head)
    for (std::uint32_t c : gens) {
      const std::uint32_t y = table(sub[head], c);
      if (!in[y]) in[y] = 1, sub.push_back(y);
    }
  std::sort(sub.begin(), sub.end());
  cd.commutator = std::move(sub);
  for (const auto& cls : cd.classes) {
    const bool first = in[cls.front()];
    for (auto g : cls)
      if (static_cast<bool>(in[g]) != first)
        throw Error("commutator subgroup is not a union of conjugacy classes");
  }

  std::vector<std::uint32_t> reps, alt;
  for (const auto& cls : cd.classes) {
    reps.push_back(cls.front());
    alt.push_back(cls.back());
  }
  cd.constants = kernels::class_constants(table, cd.class_of, reps, mode);
  if (kernels::class_constants(table, cd.class_of, alt, mode) != cd.constants)
    throw Error("class-algebra constants depend on the chosen representative");
  return cd;
}

ClassVector multiply(const ClassData& cd, const ClassVector& x, const ClassVector& y) {
  const std::size_t m = cd.count();
  ClassVector out(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j] == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < m; ++k)
        if (const auto a = cd.a(i, j, k); a != 0) out[k] += xy * a;
    }
  }
  return out;
}

ClassVector normalized_class_product(const ClassData& cd) {
  const std::size_t m = cd.count();
  ClassVector p(m, Rational(0));
  p[0] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    ClassVector c(m, Rational(0));
    c[j] = Rational(1, static_cast<std::int64_t>(cd.sizes[j]));
    p = multiply(cd, p, c);
  }
  return p;
}

GroupHaradaReport verify_harada_group(const ClassData& cd) {
  GroupHaradaReport rep;
  const ClassVector p = normalized_class_product(cd);
  rep.lhs = multiply(cd, p, p);
  rep.commutator_order = cd.commutator.size();
  rep.rhs.assign(cd.count(), Rational(0));
  for (std::size_t j : cd.commutator_classes())
    rep.rhs[j] = Rational(1, static_cast<std::int64_t>(rep.commutator_order));
  for (std::size_t j = 0; j < cd.count() && !rep.mismatch; ++j)
    if (rep.lhs[j] != rep.rhs[j]) rep.mismatch = j;

  std::ostringstream os;
  os << "|G|=" << cd.order << " classes=" << cd.count() << " |G'|=" << rep.commutator_order;
  if (rep.mismatch)
    os << "; class " << *rep.mismatch << ": lhs " << rep.lhs[*rep.mismatch] << " vs rhs "
       << rep.rhs[*rep.mismatch];
  rep.verdict = make_verdict("harada.group", !rep.mismatch, os.str());
  return rep;
}

BasedRing class_algebra_as_ring(const ClassData& cd) {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < cd.count(); ++j) labels.push_back("C" + std::to_string(j));
  return BasedRing(std::move(labels), cd.constants, cd.inverse_class, 0);
}

std::vector<BigInt> group_ring_class_product(const CayleyTable& table, const ClassData& cd,
                                             kernels::Mode mode) {
  std::vector<BigInt> acc(table.order, BigInt(0));
  acc[table.identity] = 1;
  for (const auto& cls : cd.classes) {
    std::vector<BigInt> c(table.order, BigInt(0));
    for (auto g : cls) c[g] = 1;
    acc = kernels::convolve(table, acc, c, mode);
  }
  return acc;
}

Verdict group_ring_oracle(const CayleyTable& table, const ClassData& cd, std::size_t cap) {
  if (table.order > cap)
    throw SizeError("group order " + std::to_string(table.order) + " exceeds group-ring cap");
  const ClassVector p = normalized_class_product(cd);
  const std::vector<BigInt> direct = group_ring_class_product(table, cd);
  BigInt sizes = 1;
  for (auto s : cd.sizes) sizes *= s;
  for (std::uint32_t g = 0; g < table.order; ++g) {
    const Rational want = p[cd.class_of[g]] * Rational(sizes);
    if (want != Rational(direct[g]))
      return make_verdict("group-ring.oracle", false,
                          "element " + std::to_string(g) + ": class algebra gives " +
                              want.str() + ", group ring gives " + direct[g].str());
  }
  return make_verdict("group-ring.oracle", true, "|G|=" + std::to_string(table.order));
}

Verdict coset_property(const CayleyTable& table, const ClassData& cd, std::size_t cap) {
  if (table.order > cap)
    throw SizeError("group order " + std::to_string(table.order) + " exceeds group-ring cap");
  const std::vector<BigInt> prod = group_ring_class_product(table, cd);
  std::vector<std::uint32_t> supp;
  for (std::uint32_t g = 0; g < table.order; ++g)
    if (prod[g] != 0) supp.push_back(g);
  if (supp.empty()) return make_verdict("group-ring.coset", false, "product of class sums is zero");
  std::vector<std::uint32_t> coset;
  for (auto c : cd.commutator) coset.push_back(table(supp.front(), c));
  std::sort(coset.begin(), coset.end());
  const bool ok = coset == supp;
  return make_verdict("group-ring.coset", ok,
                      "support size " + std::to_string(supp.size()) + ", |G'| = " +
                          std::to_string(cd.commutator.size()));
}

GroupCharacters group_characters(const ClassData& cd, const CharacterTable& class_table,
                                 double snap) {
  const std::size_t m = cd.count();
  GroupCharacters out;
  out.values.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  const double order = static_cast<double>(cd.order);
  for (std::size_t j = 0; j < m; ++j) {
    const double sq = order / class_table.codegrees[j];
    const double deg = std::round(std::sqrt(sq));
    if (std::abs(deg * deg - sq) > snap * order)
      throw NumericError("character degree squared is not an integer square", std::abs(deg * deg - sq));
    out.degrees.push_back(static_cast<std::int64_t>(deg));
    for (std::size_t i = 0; i < m; ++i)
      out.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          class_table(j, i) * deg / static_cast<double>(cd.sizes[i]);
  }
  return out;
}

BasedRing representation_ring(const ClassData& cd, const GroupCharacters& chars, double snap) {
  const std::size_t m = cd.count();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return chars.degrees[a] < chars.degrees[b]; });
  auto chi = [&](std::size_t a, std::size_t i) {
    return chars.values(static_cast<Eigen::Index>(order[a]), static_cast<Eigen::Index>(i));
  };

  const double g = static_cast<double>(cd.order);
  std::vector<std::int64_t> n(m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Complex s = 0;
        for (std::size_t i = 0; i < m; ++i)
          s += static_cast<double>(cd.sizes[i]) * chi(a, i) * chi(b, i) * std::conj(chi(c, i));
        s /= g;
        const double r = std::round(s.real());
        if (std::abs(s - r) > snap)
          throw NumericError("tensor multiplicity is not an integer", std::abs(s - r));
        n[(a * m + b) * m + c] = static_cast<std::int64_t>(r);
      }

  std::vector<Index> dual(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      double d = 0;
      for (std::size_t i = 0; i < m; ++i) d = std::max(d, std::abs(std::conj(chi(a, i)) - chi(b, i)));
      if (d < snap) {
        dual[a] = b;
        break;
      }
    }
  if (std::find(dual.begin(), dual.end(), m) != dual.end())
    throw NumericError("could not match a character with its complex conjugate", 1.0);

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a)
    labels.push_back("chi" + std::to_string(a) + "_" + std::to_string(chars.degrees[order[a]]));
  return BasedRing(std::move(labels), std::move(n), std::move(dual), 0);
}

}  // namespace fusionkit
