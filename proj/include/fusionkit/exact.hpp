#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fusionkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense square integer matrix in row-major order.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> a;

  explicit IntMatrix(std::size_t size = 0) : n(size), a(size * size, 0) {}
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;
  IntMatrix transpose() const;
  static IntMatrix identity(std::size_t size);
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// True iff `value` is an eigenvalue of `m`, i.e. det(m - value*I) == 0.
bool is_integer_eigenvalue(const IntMatrix& m, std::int64_t value);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace fusionkit
