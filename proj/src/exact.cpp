#include "fusionkit/exact.hpp"

#include <utility>

namespace fusionkit {

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t v = (*this)(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += v * rhs(k, c);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(c, r) = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix out(size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.n;
  if (n == 0) return 1;
  std::vector<BigInt> a(m.a.begin(), m.a.end());
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

bool is_integer_eigenvalue(const IntMatrix& m, std::int64_t value) {
  IntMatrix shifted = m;
  for (std::size_t i = 0; i < m.n; ++i) shifted(i, i) -= value;
  return determinant(shifted) == 0;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace fusionkit
