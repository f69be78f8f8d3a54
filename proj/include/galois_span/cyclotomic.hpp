#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace galois_span {

namespace detail {

// Integer coefficients of the e-th cyclotomic polynomial, lowest degree first.
inline const std::vector<BigInt>& cyclotomic_poly(int e) {
  thread_local std::map<int, std::vector<BigInt>> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  // x^e - 1 divided by every Phi_d with d | e, d < e.
  std::vector<BigInt> num(static_cast<std::size_t>(e) + 1, BigInt(0));
  num[0] = -1;
  num[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d) continue;
    const std::vector<BigInt>& den = cyclotomic_poly(d);
    const std::size_t dn = den.size() - 1;
    std::vector<BigInt> q(num.size() - dn, BigInt(0));
    for (std::size_t k = num.size(); k-- > dn;) {
      BigInt c = num[k];  // den is monic
      q[k - dn] = c;
      if (!c.is_zero())
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return cache.emplace(e, std::move(num)).first->second;
}

}  // namespace detail

// Element of Z[zeta_e] stored as sum_k c[k] zeta_e^k with c reduced modulo
// Phi_e, so c[k] = 0 for k >= phi(e) and equal values have equal vectors.
// Values of different orders are combined in Z[zeta_lcm].
class CyclotomicInt {
 public:
  CyclotomicInt() : e_(1), c_{BigInt(0)} {}
  CyclotomicInt(long v) : e_(1), c_{BigInt(v)} {}  // NOLINT: integers embed implicitly
  CyclotomicInt(const BigInt& v) : e_(1), c_{v} {}  // NOLINT

  // sum_k coeffs[k] zeta_e^k, coeffs of any length (taken mod x^e - 1).
  CyclotomicInt(int e, const std::vector<BigInt>& coeffs) : e_(e), c_(static_cast<std::size_t>(e), BigInt(0)) {
    if (e < 1) fail(Errc::InvalidArgument, "root of unity order must be positive");
    for (std::size_t k = 0; k < coeffs.size(); ++k) c_[k % c_.size()] += coeffs[k];
    reduce();
  }

  static CyclotomicInt root(int e, long long k) {
    std::vector<BigInt> c(static_cast<std::size_t>(e), BigInt(0));
    c[static_cast<std::size_t>(((k % e) + e) % e)] = 1;
    return CyclotomicInt(e, c);
  }

  int order() const { return e_; }
  const std::vector<BigInt>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const BigInt& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  std::optional<BigInt> as_integer() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return std::nullopt;
    return c_[0];
  }

  // Same value in Z[zeta_f]; f must be a multiple of e.
  CyclotomicInt lift(int f) const {
    if (f == e_) return *this;
    if (f % e_) fail(Errc::InvalidArgument, "cyclotomic lift to a non-multiple order");
    std::vector<BigInt> c(static_cast<std::size_t>(f), BigInt(0));
    const int step = f / e_;
    for (std::size_t k = 0; k < c_.size(); ++k) c[k * static_cast<std::size_t>(step)] = c_[k];
    return CyclotomicInt(f, c);
  }

  // Complex conjugate: zeta^k -> zeta^-k.
  CyclotomicInt conj() const {
    std::vector<BigInt> c(c_.size(), BigInt(0));
    for (std::size_t k = 0; k < c_.size(); ++k) c[(c_.size() - k) % c_.size()] = c_[k];
    return CyclotomicInt(e_, c);
  }

  friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.e_ != b.e_) return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
    CyclotomicInt r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
  }

  friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.e_ != b.e_) return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
    CyclotomicInt r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
    return r;
  }

  CyclotomicInt operator-() const {
    CyclotomicInt r = *this;
    for (BigInt& x : r.c_) x = -x;
    return r;
  }

  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.e_ != b.e_) return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
    if (a.e_ == 1) return CyclotomicInt(a.c_[0] * b.c_[0]);
    const std::size_t e = a.c_.size();
    std::vector<BigInt> p(e, BigInt(0));
    for (std::size_t i = 0; i < e; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < e; ++j)
        if (!b.c_[j].is_zero()) p[(i + j) % e] += a.c_[i] * b.c_[j];
    }
    CyclotomicInt r;
    r.e_ = a.e_;
    r.c_ = std::move(p);
    r.reduce();
    return r;
  }

  CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }
  CyclotomicInt& operator*=(const CyclotomicInt& o) { return *this = *this * o; }

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.e_ == b.e_) return a.c_ == b.c_;
    const int l = std::lcm(a.e_, b.e_);
    return a.lift(l).c_ == b.lift(l).c_;
  }
  friend bool operator!=(const CyclotomicInt& a, const CyclotomicInt& b) { return !(a == b); }

 private:
  template <class Op>
  static CyclotomicInt binary(const CyclotomicInt& a, const CyclotomicInt& b, Op op) {
    const int l = std::lcm(a.e_, b.e_);
    return op(a.lift(l), b.lift(l));
  }

  void reduce() {
    const std::vector<BigInt>& phi = detail::cyclotomic_poly(e_);
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = c_.size(); k-- > d;) {
      if (c_[k].is_zero()) continue;
      const BigInt c = c_[k];
      for (std::size_t j = 0; j <= d; ++j) c_[k - d + j] -= c * phi[j];
    }
  }

  int e_;
  std::vector<BigInt> c_;
};

inline bool is_zero(const CyclotomicInt& x) { return x.is_zero(); }

// "3 - 2*z12^5 + z12^7"; z_e denotes exp(2 pi i / e).
inline std::string to_string(const CyclotomicInt& x) {
  std::string out;
  const auto& c = x.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    BigInt mag = c[k] < 0 ? BigInt(-c[k]) : c[k];
    std::string term;
    if (k == 0) {
      term = mag.str();
    } else {
      term = (mag == 1 ? std::string() : mag.str() + "*") + "z" + std::to_string(x.order()) +
             (k == 1 ? std::string() : "^" + std::to_string(k));
    }
    if (out.empty())
      out = (c[k] < 0 ? "-" : "") + term;
    else
      out += (c[k] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace galois_span
