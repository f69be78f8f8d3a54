#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace galois_span;

namespace {

// Leibniz expansion over the rationals.
Rational leibniz_rational(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct DegreeCase {
  std::vector<int> p;
  ExponentVector s, b;
};

const std::vector<DegreeCase> kDegreeCases{
    {{2}, {2}, {1}}, {{2}, {3}, {2}}, {{3}, {2}, {1}}, {{2, 3}, {1, 1}, {0, 1}}};

}  // namespace

TEST(CyclicFamily, ExponentHelpers) {
  EXPECT_EQ(exp_join({1, 3, 0}, {2, 1, 0}), (ExponentVector{2, 3, 0}));
  EXPECT_EQ(exp_meet({1, 3, 0}, {2, 1, 0}), (ExponentVector{1, 1, 0}));
  EXPECT_EQ(exp_pow({2, 3, 5}, {2, 1, 1}), BigInt(60));
  EXPECT_THROW(exp_join({1}, {1, 2}), Error);
  const auto grid = exponent_grid({2, 1});
  EXPECT_EQ(grid.size(), 6u);
  EXPECT_EQ(grid.front(), (ExponentVector{0, 0}));
  EXPECT_EQ(grid[1], (ExponentVector{0, 1}));
  EXPECT_EQ(grid.back(), (ExponentVector{2, 1}));
  EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
}

TEST(CyclicFamily, FactorRecoversN) {
  for (long long n = 1; n <= 500; ++n) {
    const auto [p, s] = factor(n);
    long long back = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_EQ(oracle::mu_number(p[i]), -1);
      back *= ipow(p[i], s[i]);
    }
    EXPECT_EQ(back, n);
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
  }
}

TEST(CyclicFamily, SpecValidation) {
  EXPECT_THROW((FamilySpec{{4}, {1}, {0}}.validate()), Error);
  EXPECT_THROW((FamilySpec{{2, 2}, {1, 1}, {0, 0}}.validate()), Error);
  EXPECT_THROW((FamilySpec{{2}, {1}, {2}}.validate()), Error);
  EXPECT_THROW((FamilySpec{{2}, {1, 1}, {0}}.validate()), Error);
  EXPECT_NO_THROW((FamilySpec{{2, 3}, {1, 1}, {0, 1}}.validate()));
}

TEST(CyclicFamily, KappaMatchesSineProduct) {
  for (const auto& c : kDegreeCases) {
    const FamilySpec f{c.p, c.s, c.b};
    const int n = static_cast<int>(exp_pow(c.p, c.s));
    const int v = static_cast<int>(exp_pow(c.p, c.b));
    for (int t = 0; t <= 4; ++t) {
      std::vector<int> volts(static_cast<std::size_t>(t), v % n);
      volts.push_back(1 % n);
      EXPECT_EQ(family_kappa(f, t), BigInt(oracle::cyclic_bouquet_kappa(n, volts))) << "t=" << t;
    }
  }
}

TEST(CyclicFamily, SquareFormForZ4) {
  const FamilySpec f{{2}, {2}, {1}};
  for (int t = 0; t <= 5; ++t) EXPECT_EQ(family_kappa(f, t), BigInt((2 + 4 * t) * (2 + 4 * t))) << "t=" << t;
}

TEST(CyclicFamily, InterpolatedDegreesMatchClosedForm) {
  for (const auto& c : kDegreeCases) {
    const FamilySpec f{c.p, c.s, c.b};
    for (const auto& a : exponent_grid(c.s)) {
      const DegreeResult r = kappa_polynomial_in_t(f, a);
      EXPECT_EQ(BigInt(r.degree), r.closed_form);
      // p^a (1 - 1/p^{(a-b) v 0}) evaluated by hand
      long long pa = 1, pd = 1;
      for (std::size_t i = 0; i < a.size(); ++i) {
        pa *= ipow(c.p[i], a[i]);
        pd *= ipow(c.p[i], std::max(a[i] - c.b[i], 0));
      }
      EXPECT_EQ(r.degree, pa - pa / pd);
      // the interpolant predicts kappa beyond the sample points
      const int beyond = r.degree + 4;
      const int n = static_cast<int>(pa);
      const int v = static_cast<int>(exp_pow(c.p, c.b) % std::max(n, 1));
      std::vector<int> volts(static_cast<std::size_t>(beyond), v);
      volts.push_back(1 % n);
      EXPECT_EQ(r.poly(Rational(beyond)), Rational(oracle::cyclic_bouquet_kappa(n, volts)));
    }
  }
}

TEST(CyclicFamily, KnownMixedDegree) {
  EXPECT_EQ(kappa_degree_in_t(FamilySpec{{2, 3}, {1, 1}, {0, 1}}, {1, 1}), 3);
  EXPECT_EQ(kappa_degree_in_t(FamilySpec{{2}, {2}, {1}}, {2}), 2);
}

TEST(CyclicFamily, MatrixEntriesByHand) {
  const RationalMatrix m = build_matrix_M_bar({2}, {2});
  // rows/cols a = 0, 1, 2: 1 - 2^{-(a+b-2) v 0}
  const Rational h(1, 2), q(3, 4);
  const std::vector<std::vector<Rational>> expect{{0, 0, 0}, {0, 0, h}, {0, h, q}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), expect[i][j]);
  const RationalMatrix inner = build_matrix_M({2}, {2});
  EXPECT_EQ(inner.rows(), 2u);
  EXPECT_EQ(inner(1, 1), q);
}

TEST(CyclicFamily, DecompositionIdentities) {
  for (auto [p, s] : std::vector<std::pair<std::vector<int>, ExponentVector>>{
           {{2}, {1}}, {{2}, {2}}, {{3}, {1}}, {{2, 3}, {1, 1}}, {{2}, {3}}, {{2, 5}, {2, 1}}})
    EXPECT_TRUE(decomposition_identities_hold(p, s));
}

TEST(CyclicFamily, CauchyBinetOnRandomMatrices) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-4, 4), den(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    RationalMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = Rational(d(rng), den(rng));
        b(i, j) = Rational(d(rng), den(rng));
      }
    EXPECT_TRUE(cauchy_binet_check(a, b, static_cast<std::size_t>(trial) % n, static_cast<std::size_t>(trial + 1) % n));
  }
}

TEST(CyclicFamily, DeterminantMagnitudes) {
  for (auto [p, s] : std::vector<std::pair<std::vector<int>, ExponentVector>>{
           {{2}, {1}}, {{2}, {2}}, {{3}, {1}}, {{2, 3}, {1, 1}}, {{2}, {3}}}) {
    const LemmaMatrixResult r = lemma_matrix(p, s);
    EXPECT_EQ(r.det, leibniz_rational(build_matrix_M(p, s)));
    long long t = 1;
    for (int x : s) t *= x + 1;
    Rational mag = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (long long k = 0; k < s[i] * t / (s[i] + 1); ++k) mag *= Rational(p[i] - 1, p[i]);
    EXPECT_EQ(abs(r.det), mag);
    EXPECT_TRUE(r.nonzero);
    EXPECT_TRUE(lemma_matrix_check(p, s).passed());
  }
}

TEST(CyclicFamily, SignDiscrepancyIsReported) {
  const LemmaMatrixResult r = lemma_matrix({2}, {2});
  EXPECT_EQ(r.det, Rational(-1, 4));
  EXPECT_EQ(r.printed, Rational(1, 4));
  EXPECT_FALSE(r.sign_matches_paper);
  const VerificationReport rep = lemma_matrix_check({2}, {2});
  EXPECT_TRUE(rep.passed());
  ASSERT_FALSE(rep.notes.empty());
  EXPECT_EQ(lemma_matrix({2}, {3}).det, Rational(-1, 8));
  EXPECT_TRUE(lemma_matrix({2}, {1}).sign_matches_paper);
}

TEST(CyclicFamily, DegreeMatrixIsNonsingular) {
  for (long long n : {2, 3, 4, 6, 12, 30}) {
    const auto [p, s] = factor(n);
    EXPECT_NE(leibniz_rational(degree_matrix(p, s)), Rational(0)) << n;
  }
}

TEST(CyclicFamily, Certificates) {
  for (long long n : {2, 3, 4, 6, 12, 30}) {
    const VerificationReport r = nonexistence_certificate(n);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.details["conclusion"], "only the trivial relation m = 0 survives");
    EXPECT_EQ(r.left, r.right);
  }
  EXPECT_THROW(nonexistence_certificate(1), Error);
}
