#include "fusionkit/kernels.hpp"

#include <algorithm>

#include "fusionkit/group_algebra.hpp"

namespace fusionkit::kernels {

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t x : p) h = (h ^ x) * 1099511628211ull;
  return h;
}

namespace {

bool associative_at(const BasedRing& ring, Index i, Index j, Index k, Index l) {
  const std::size_t r = ring.rank();
  std::int64_t lhs = 0, rhs = 0;
  for (Index m = 0; m < r; ++m) {
    lhs += ring(i, j, m) * ring(m, k, l);
    rhs += ring(j, k, m) * ring(i, m, l);
  }
  return lhs == rhs;
}

}  // namespace

AssociativityResult associativity(const BasedRing& ring, Mode mode, std::size_t max_recorded) {
  const auto r = static_cast<std::int64_t>(ring.rank());
  AssociativityResult out;
  if (mode == Mode::serial) {
    for (Index i = 0; i < ring.rank(); ++i)
      for (Index j = 0; j < ring.rank(); ++j)
        for (Index k = 0; k < ring.rank(); ++k)
          for (Index l = 0; l < ring.rank(); ++l)
            if (!associative_at(ring, i, j, k, l)) {
              if (out.first.size() < max_recorded) out.first.push_back({i, j, k, l});
              ++out.failures;
            }
    return out;
  }

  // Each i owns its slot; the first failures are merged in i order.
  std::vector<std::size_t> counts(ring.rank(), 0);
  std::vector<std::vector<std::array<Index, 4>>> firsts(ring.rank());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ii = 0; ii < r; ++ii) {
    const auto i = static_cast<Index>(ii);
    for (Index j = 0; j < ring.rank(); ++j)
      for (Index k = 0; k < ring.rank(); ++k)
        for (Index l = 0; l < ring.rank(); ++l)
          if (!associative_at(ring, i, j, k, l)) {
            if (firsts[i].size() < max_recorded) firsts[i].push_back({i, j, k, l});
            ++counts[i];
          }
  }
  for (Index i = 0; i < ring.rank(); ++i) {
    out.failures += counts[i];
    for (const auto& f : firsts[i])
      if (out.first.size() < max_recorded) out.first.push_back(f);
  }
  return out;
}

std::vector<std::uint32_t> permutation_products(std::span<const Permutation> elements,
                                                const PermutationIndex& index, Mode mode) {
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> mul(n * n);
  auto row = [&](std::size_t a) {
    Permutation c;
    for (std::size_t b = 0; b < n; ++b) {
      c = compose(elements[a], elements[b]);
      mul[a * n + b] = index.at(c);
    }
  };
  if (mode == Mode::serial) {
    for (std::size_t a = 0; a < n; ++a) row(a);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) row(static_cast<std::size_t>(a));
  }
  return mul;
}

std::vector<std::int64_t> class_constants(const CayleyTable& table,
                                          std::span<const std::size_t> class_of,
                                          std::span<const std::uint32_t> representatives,
                                          Mode mode) {
  const std::size_t m = representatives.size();
  std::vector<std::int64_t> a(m * m * m, 0);
  auto column = [&](std::size_t k) {
    const std::uint32_t z = representatives[k];
    for (std::uint32_t x = 0; x < table.order; ++x) {
      const std::uint32_t y = table(table.inv[x], z);
      ++a[(class_of[x] * m + class_of[y]) * m + k];
    }
  };
  if (mode == Mode::serial) {
    for (std::size_t k = 0; k < m; ++k) column(k);
  } else {
    // Column k only touches entries with last index k.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(m); ++k) column(static_cast<std::size_t>(k));
  }
  return a;
}

namespace {

// out[z] = sum_g x[g] y[g^{-1} z]
template <class T>
std::vector<T> convolve_impl(const CayleyTable& table, std::span<const T> x, std::span<const T> y,
                             Mode mode) {
  const std::size_t n = table.order;
  std::vector<T> out(n, T(0));
  if (mode == Mode::serial) {
    for (std::size_t g = 0; g < n; ++g) {
      if (x[g] == 0) continue;
      for (std::size_t h = 0; h < n; ++h)
        if (y[h] != 0) out[table(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(h))] += x[g] * y[h];
    }
    return out;
  }
  std::vector<std::uint32_t> xs;
  for (std::size_t g = 0; g < n; ++g)
    if (x[g] != 0) xs.push_back(static_cast<std::uint32_t>(g));
#pragma omp parallel for schedule(static)
  for (std::int64_t zz = 0; zz < static_cast<std::int64_t>(n); ++zz) {
    const auto z = static_cast<std::uint32_t>(zz);
    T s(0);
    for (std::uint32_t g : xs) {
      const std::uint32_t h = table(table.inv[g], z);
      if (y[h] != 0) s += x[g] * y[h];
    }
    out[z] = s;
  }
  return out;
}

}  // namespace

std::vector<BigInt> convolve(const CayleyTable& table, std::span<const BigInt> x,
                             std::span<const BigInt> y, Mode mode) {
  return convolve_impl<BigInt>(table, x, y, mode);
}

std::vector<std::int64_t> convolve(const CayleyTable& table, std::span<const std::int64_t> x,
                                   std::span<const std::int64_t> y, Mode mode) {
  return convolve_impl<std::int64_t>(table, x, y, mode);
}

}  // namespace fusionkit::kernels
