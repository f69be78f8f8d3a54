#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace galois_span {

// Dense univariate polynomial in u, coefficients stored lowest degree first.
// Trailing zero coefficients are trimmed, so the zero polynomial has no
// coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(const T& constant) : c_{constant} { trim(); }  // NOLINT: implicit by design of ring embedding

  static Polynomial monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T{});
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T{}; }

  T operator()(const T& x) const {
    T acc = T{};
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() < 2) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> n(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) n[k] = T{} - c_[k];
    return Polynomial(std::move(n));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> s(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t k = 0; k < a.c_.size(); ++k) s[k] = s[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) s[k] = s[k] + b.c_[k];
    return Polynomial(std::move(s));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> p(a.c_.size() + b.c_.size() - 1, T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] = p[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(p));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
bool is_zero(const Polynomial<T>& p) {
  return p.is_zero_poly();
}

using IntPolynomial = Polynomial<BigInt>;

// Exact Lagrange interpolation through (x_i, y_i) with distinct integer nodes.
inline Polynomial<Rational> interpolate(const std::vector<BigInt>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) fail(Errc::LengthMismatch, "interpolation nodes/values");
  Polynomial<Rational> result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial<Rational> basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial<Rational>(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
      denom *= Rational(xs[i] - xs[j]);
    }
    result = result + basis * Polynomial<Rational>(ys[i] / denom);
  }
  return result;
}

inline IntPolynomial to_integer_polynomial(const Polynomial<Rational>& p) {
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const Rational& r : p.coefficients()) {
    if (!is_integer(r)) fail(Errc::InterpolationMismatch, "non-integer coefficient " + to_string(r));
    c.push_back(numerator(r));
  }
  return IntPolynomial(std::move(c));
}

template <class T>
std::vector<std::string> coefficient_strings(const Polynomial<T>& p) {
  std::vector<std::string> out;
  for (const T& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace galois_span
