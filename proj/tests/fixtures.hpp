#pragma once

// Small rings and groups written out by hand, independent of the corpus
// generators, plus a loader for corpus files.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/based_ring.hpp"
#include "fusionkit/group_algebra.hpp"
#include "fusionkit/io.hpp"

namespace fixtures {

using fusionkit::BasedRing;
using fusionkit::Index;
using Products = std::map<std::pair<Index, Index>, std::map<Index, std::int64_t>>;

/// Unit is index 0; products with the unit are filled in.
inline BasedRing make_ring(std::vector<std::string> labels, std::vector<Index> dual,
                           const Products& products) {
  const std::size_t r = labels.size();
  std::vector<std::int64_t> n(r * r * r, 0);
  for (Index i = 0; i < r; ++i) {
    n[(0 * r + i) * r + i] = 1;
    n[(i * r + 0) * r + i] = 1;
  }
  for (const auto& [ij, out] : products)
    for (const auto& [k, v] : out) n[(ij.first * r + ij.second) * r + k] = v;
  return BasedRing(std::move(labels), std::move(n), std::move(dual), 0);
}

inline BasedRing cyclic(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Index> dual;
  Products p;
  for (Index a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    dual.push_back((n - a) % n);
    for (Index b = 1; b < n; ++b)
      if (a > 0) p[{a, b}] = {{(a + b) % n, 1}};
  }
  return make_ring(labels, dual, p);
}

// 1, psi, sigma
inline BasedRing ising() {
  return make_ring({"1", "psi", "sigma"}, {0, 1, 2},
                   {{{1, 1}, {{0, 1}}}, {{1, 2}, {{2, 1}}}, {{2, 1}, {{2, 1}}}, {{2, 2}, {{0, 1}, {1, 1}}}});
}

inline BasedRing fibonacci() {
  return make_ring({"1", "tau"}, {0, 1}, {{{1, 1}, {{0, 1}, {1, 1}}}});
}

// 1, sgn, V
inline BasedRing rep_s3() {
  return make_ring({"1", "sgn", "V"}, {0, 1, 2},
                   {{{1, 1}, {{0, 1}}},
                    {{1, 2}, {{2, 1}}},
                    {{2, 1}, {{2, 1}}},
                    {{2, 2}, {{0, 1}, {1, 1}, {2, 1}}}});
}

// 1, a, b, ab, m
inline BasedRing ty_klein() {
  Products p;
  for (Index a = 1; a < 4; ++a) {
    for (Index b = 1; b < 4; ++b) p[{a, b}] = {{a ^ b, 1}};
    p[{a, 4}] = {{4, 1}};
    p[{4, a}] = {{4, 1}};
  }
  p[{4, 4}] = {{0, 1}, {1, 1}, {2, 1}, {3, 1}};
  return make_ring({"1", "a", "b", "ab", "m"}, {0, 1, 2, 3, 4}, p);
}

/// S3 class algebra with classes e, t (transpositions, 3), c (3-cycles, 2):
/// t^2 = 3e + 3c, tc = ct = 2t, c^2 = 2e + c.
inline BasedRing s3_class_algebra() {
  return make_ring({"e", "t", "c"}, {0, 1, 2},
                   {{{1, 1}, {{0, 3}, {2, 3}}},
                    {{1, 2}, {{1, 2}}},
                    {{2, 1}, {{1, 2}}},
                    {{2, 2}, {{0, 2}, {2, 1}}}});
}

/// Vec(S3) as a pointed, non-commutative fusion ring.
inline BasedRing vec_s3() {
  const auto t = fusionkit::cayley_from_generators(
      std::vector<fusionkit::Permutation>{{1, 0, 2}, {1, 2, 0}});
  const std::size_t n = t.order;
  std::vector<std::int64_t> c(n * n * n, 0);
  std::vector<Index> dual(n);
  std::vector<std::string> labels(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    dual[a] = t.inv[a];
    labels[a] = "g" + std::to_string(a);
    for (std::uint32_t b = 0; b < n; ++b) c[(a * n + b) * n + t(a, b)] = 1;
  }
  return BasedRing(labels, c, dual, t.identity);
}

inline fusionkit::CayleyTable group(const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<fusionkit::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(fusionkit::parse_cycles(c, degree));
  return fusionkit::cayley_from_generators(gens);
}

inline std::string corpus(const std::string& rel) { return std::string(FUSIONKIT_CORPUS_DIR) + "/" + rel; }

inline fusionkit::io::RingFile corpus_ring(const std::string& name) {
  return std::get<fusionkit::io::RingFile>(fusionkit::io::load_file(corpus("rings/" + name)).content);
}

inline fusionkit::CayleyTable corpus_group(const std::string& name) {
  return std::get<fusionkit::io::GroupFile>(fusionkit::io::load_file(corpus("groups/" + name)).content).table;
}

}  // namespace fixtures
