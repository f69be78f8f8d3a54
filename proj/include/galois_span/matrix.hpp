#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace galois_span {

// Dense row-major matrix over an arbitrary (commutative) coefficient type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) fail(Errc::InvalidArgument, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::LengthMismatch, "matrix sum shape");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::LengthMismatch, "matrix difference shape");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) fail(Errc::LengthMismatch, "matrix product shape");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = T{};
      bool first = true;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (first) {
          acc = a(i, k) * b(k, j);
          first = false;
        } else {
          acc = acc + a(i, k) * b(k, j);
        }
      }
      if (!first) c(i, j) = acc;
    }
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

// Submatrix with row `r` and column `c` deleted.
template <class T>
Matrix<T> minor_matrix(const Matrix<T>& a, std::size_t r, std::size_t c) {
  if (r >= a.rows() || c >= a.cols()) fail(Errc::IndexOutOfRange, "minor index");
  Matrix<T> m(a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0, mi = 0; i < a.rows(); ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, mj = 0; j < a.cols(); ++j) {
      if (j == c) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

// Kronecker product: block (i, j) of the result is p(i, j) * q.
template <class T>
Matrix<T> kronecker(const Matrix<T>& p, const Matrix<T>& q) {
  Matrix<T> k(p.rows() * q.rows(), p.cols() * q.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      for (std::size_t a = 0; a < q.rows(); ++a)
        for (std::size_t b = 0; b < q.cols(); ++b) k(i * q.rows() + a, j * q.cols() + b) = p(i, j) * q(a, b);
  return k;
}

// Fraction-free (Bareiss) determinant over the integers. Every intermediate
// division is exact.
inline BigInt determinant(IntMatrix m) {
  if (!m.square()) fail(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Rational determinant: clear each row's denominators, run Bareiss on the
// integer matrix, divide the scale back out.
inline Rational determinant(const RationalMatrix& m) {
  if (!m.square()) fail(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix scaled(n, n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) row_lcm = lcm(row_lcm, denominator(m(i, j)));
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = numerator(m(i, j) * row_lcm);
    scale *= row_lcm;
  }
  return Rational(determinant(scaled), scale);
}

inline std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline RationalMatrix to_rational(const IntMatrix& m) {
  return m.map([](const BigInt& x) { return Rational(x); });
}

// Characteristic polynomial by Berkowitz's division-free algorithm. Works over
// any commutative ring; `zero` and `one` supply the ring's constants (some
// coefficient types carry runtime parameters). Returns c with
// det(xI - A) = c[0] x^n + c[1] x^{n-1} + ... + c[n].
template <class T>
std::vector<T> charpoly_berkowitz(const Matrix<T>& a, const T& zero, const T& one) {
  if (!a.square()) fail(Errc::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {one};
  std::vector<T> c = {one, zero - a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> t(r + 2, zero);
    t[0] = one;
    t[1] = zero - a(r, r);
    std::vector<T> v(r, zero);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T dot = zero;
      for (std::size_t j = 0; j < r; ++j) dot = dot + a(r, j) * v[j];
      t[k + 2] = zero - dot;
      if (k + 1 < r) {
        std::vector<T> w(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] = w[i] + a(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<T> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] = next[i] + t[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

template <class T>
T determinant_division_free(const Matrix<T>& a, const T& zero, const T& one) {
  std::vector<T> c = charpoly_berkowitz(a, zero, one);
  const std::size_t n = a.rows();
  return (n % 2 == 0) ? c[n] : zero - c[n];
}

}  // namespace galois_span
