#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "gorenstein/error.hpp"

namespace gorenstein {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

/// Arbitrary-precision integer and exact rational scalar.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

/// Floor and ceiling of a / b for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// gcd of the absolute values of the entries (0 for the zero vector).
inline Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// Divides out the content of v in place; returns the content.
inline Int make_primitive(std::span<Int> v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return g;
}

inline Int to_int(const BigInt& x) {
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
    throw OverflowError("value does not fit in 64 bits");
  return static_cast<Int>(x);
}

/// Scales a rational vector by the lcm of its denominators and divides out
/// the content, giving the primitive integer vector on the same ray.
inline IntVector primitive_integer_multiple(std::span<const Rational> v) {
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<BigInt> w;
  w.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    w.push_back(numerator(x) * (l / denominator(x)));
    g = boost::multiprecision::gcd(g, abs(w.back()));
  }
  IntVector out;
  out.reserve(v.size());
  for (auto& x : w) out.push_back(to_int(g > 1 ? BigInt(x / g) : x));
  return out;
}

inline Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace gorenstein
