#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace galois_span;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(BigInt, RationalFormatting) {
  EXPECT_EQ(to_string(Rational(-1, 4)), "-1/4");
  EXPECT_EQ(to_string(Rational(6, 3)), "2");
  EXPECT_EQ(to_string(ipow(BigInt(2), 100)), "1267650600228229401496703205376");
}

TEST(BigInt, ExactRoot) {
  EXPECT_EQ(*exact_root(BigInt(1024), 10), 2);
  EXPECT_EQ(*exact_root(ipow(BigInt(12345), 7), 7), 12345);
  EXPECT_FALSE(exact_root(BigInt(1025), 10));
  EXPECT_FALSE(exact_root(BigInt(-8), 3));
}

TEST(BigInt, RationalPowers) {
  EXPECT_EQ(rpow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_THROW(rpow(Rational(0), -1), Error);
  EXPECT_EQ(lcm(BigInt(4), BigInt(6)), 12);
}

TEST(Matrix, BareissMatchesLeibniz) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const IntMatrix m = random_int_matrix(rng, n, 5);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Matrix, SingularAndPivoting) {
  const IntMatrix z{{0, 1}, {1, 0}};
  EXPECT_EQ(determinant(z), -1);
  const IntMatrix s{{1, 2}, {2, 4}};
  EXPECT_EQ(determinant(s), 0);
  EXPECT_EQ(rank(to_rational(s)), 1u);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), Error);
}

TEST(Matrix, RationalDeterminant) {
  const RationalMatrix m{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}};
  EXPECT_EQ(determinant(m), Rational(1, 10) - Rational(1, 12));
}

TEST(Matrix, KroneckerDeterminant) {
  // det(A (x) B) = det(A)^m det(B)^n for A n x n, B m x m
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix a = random_int_matrix(rng, 2, 4), b = random_int_matrix(rng, 3, 4);
    EXPECT_EQ(determinant(kronecker(a, b)), ipow(determinant(a), 3) * ipow(determinant(b), 2));
  }
}

TEST(Matrix, BerkowitzCharpoly) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const IntMatrix a = random_int_matrix(rng, n, 4);
    const auto c = charpoly_berkowitz(a, BigInt(0), BigInt(1));
    ASSERT_EQ(c.size(), n + 1);
    for (long x = -2; x <= 2; ++x) {
      IntMatrix xa = IntMatrix::identity(n, 0, x) - a;
      BigInt value = 0;
      for (const auto& coeff : c) value = value * x + coeff;
      EXPECT_EQ(value, oracle::leibniz_det(xa));
    }
    EXPECT_EQ(determinant_division_free(a, BigInt(0), BigInt(1)), determinant(a));
  }
}

TEST(Polynomial, InterpolationRoundTrip) {
  const IntPolynomial p(std::vector<BigInt>{3, -1, 0, 2});
  std::vector<BigInt> xs;
  std::vector<Rational> ys;
  for (int x = -2; x <= 3; ++x) {
    xs.push_back(x);
    ys.push_back(Rational(p(BigInt(x))));
  }
  EXPECT_EQ(to_integer_polynomial(interpolate(xs, ys)), p);
  ys[0] += Rational(1, 2);
  EXPECT_THROW(to_integer_polynomial(interpolate(xs, ys)), Error);
}
