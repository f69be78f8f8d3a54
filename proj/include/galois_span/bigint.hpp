#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "error.hpp"

namespace galois_span {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline std::string to_string(const BigInt& x) { return x.str(); }

// "p/q" with q > 0, or just "p" for integers.
inline std::string to_string(const Rational& x) {
  const BigInt& num = boost::multiprecision::numerator(x);
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline BigInt numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

inline BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp) base *= base;
  }
  return result;
}

inline Rational rpow(const Rational& base, std::int64_t exp) {
  if (exp < 0) {
    if (base.is_zero()) fail(Errc::InvalidArgument, "zero to a negative power");
    return Rational(1) / rpow(base, -exp);
  }
  return Rational(ipow(numerator(base), std::uint64_t(exp)), ipow(denominator(base), std::uint64_t(exp)));
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

// Exact k-th root of a nonnegative integer, if it exists.
inline std::optional<BigInt> exact_root(const BigInt& x, unsigned k) {
  if (k == 0) fail(Errc::InvalidArgument, "zeroth root");
  if (x < 0) return std::nullopt;
  if (x < 2 || k == 1) return x;
  // binary search on [0, 2^(bits/k + 1)]
  std::size_t bits = boost::multiprecision::msb(x) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (ipow(mid, k) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (ipow(lo, k) == x) return lo;
  return std::nullopt;
}

inline BigInt parse_bigint(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "not an integer: '" + s + "'");
  }
}

}  // namespace galois_span
