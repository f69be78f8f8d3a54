#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace galois_span;

namespace {

Poset random_poset(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return Poset(labels, oracle::random_order(rng, n));
}

// zeta * mu = identity in the incidence algebra.
bool is_zeta_inverse(const Poset& p, const MobiusTable& mu) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      BigInt s = 0;
      for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) s += mu(z, y);
      if (s != (x == y ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace

TEST(Poset, ChainMobius) {
  const Poset c = chain_poset(5);
  const MobiusTable mu = mobius(c);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) EXPECT_EQ(mu(i, j), j == i ? 1 : (j == i + 1 ? -1 : 0));
}

TEST(Poset, DivisorPosetGivesNumberTheoreticMobius) {
  for (long long n : {1LL, 12LL, 30LL, 36LL, 60LL}) {
    const Poset d = divisor_poset(n);
    const MobiusTable mu = mobius(d);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d.leq(i, j)) {
          const long long a = std::stoll(d.label(i)), b = std::stoll(d.label(j));
          EXPECT_EQ(mu(i, j), oracle::mu_number(b / a));
        }
  }
  for (long long n = 1; n <= 60; ++n) EXPECT_EQ(classical_mobius(n), oracle::mu_number(n));
}

TEST(Poset, BooleanLattice) {
  // subsets of {0,1,2}: mu(A,B) = (-1)^{|B \ A|}
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(8, std::vector<bool>(8));
  for (unsigned a = 0; a < 8; ++a) {
    labels.push_back(std::to_string(a));
    for (unsigned b = 0; b < 8; ++b) leq[a][b] = (a & b) == a;
  }
  const Poset p(labels, leq);
  const MobiusTable mu = mobius(p);
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 0; b < 8; ++b)
      if ((a & b) == a) {
        EXPECT_EQ(mu(a, b), std::popcount(b & ~a) % 2 ? -1 : 1);
      }
}

TEST(Poset, RandomInversionRoundTrips) {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const Poset p = random_poset(rng, n);
    const MobiusTable mu = mobius(p);
    ASSERT_TRUE(is_zeta_inverse(p, mu));
    std::vector<Rational> f;
    for (std::size_t i = 0; i < n; ++i) f.emplace_back(val(rng), 1 + std::abs(val(rng)));
    std::vector<Rational> g(n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (p.leq(y, x)) g[x] += f[y];
    for (std::size_t x = 0; x < n; ++x) {
      Rational back = 0;
      for (std::size_t y = 0; y < n; ++y)
        if (p.leq(y, x)) back += Rational(mu(y, x)) * g[y];
      EXPECT_EQ(back, f[x]);
    }
    EXPECT_TRUE(mobius_inversion_check(p, f));
  }
}

TEST(Poset, AdjoinedElements) {
  const Poset p = adjoin_top(adjoin_bottom(chain_poset(2), "bot"), "top");
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p.find("bot"), 2u);
  EXPECT_EQ(p.find("top"), 3u);
  EXPECT_TRUE(p.less(2, 0));
  EXPECT_TRUE(p.less(1, 3));
  EXPECT_THROW(adjoin_top(p, "top"), Error);
}

TEST(Poset, InvalidRelationsRejected) {
  // not antisymmetric
  EXPECT_THROW(Poset({"a", "b"}, {{true, true}, {true, true}}), Error);
  // not transitive
  EXPECT_THROW(Poset({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}), Error);
  // not reflexive
  EXPECT_THROW(Poset({"a"}, {{false}}), Error);
}

TEST(Poset, HasseDiagramHasCoverEdgesOnly) {
  const std::string dot = hasse_dot(chain_poset(4));
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++arrows;
  EXPECT_EQ(arrows, 3u);
}
