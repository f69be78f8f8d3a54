#pragma once

// Reference computations kept deliberately naive and independent of the
// library's algorithms.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "galois_span/galois_span.hpp"

namespace oracle {

using galois_span::BigInt;
using galois_span::Rational;

// Leibniz expansion over all permutations.
template <class M>
BigInt leibniz_det(const M& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Counts (n-1)-edge subsets that connect every vertex; loops never qualify.
inline long long spanning_trees_by_subsets(int n, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  long long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    bool forest = true;
    for (int i = 0; i < m && forest; ++i) {
      if (!(mask >> i & 1u)) continue;
      const int a = root(edges[static_cast<std::size_t>(i)].first), b = root(edges[static_cast<std::size_t>(i)].second);
      if (a == b) forest = false;
      else parent[static_cast<std::size_t>(a)] = b;
    }
    if (forest) ++count;
  }
  return count;
}

// A random spanning tree plus extra edges (loops and multi-edges allowed).
inline std::pair<int, std::vector<std::pair<int, int>>> random_connected(std::mt19937_64& rng, int max_vertices,
                                                                          int max_edges) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  const int extra = std::uniform_int_distribution<int>(0, std::max(0, max_edges - (n - 1)))(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) edges.emplace_back(pick(rng), pick(rng));
  return {n, edges};
}

// Random partial order: i <= j only when i <= j as integers, closed transitively.
inline std::vector<std::vector<bool>> random_order(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::bernoulli_distribution coin(0.35);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) leq[i][j] = coin(rng);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return leq;
}

// Number-theoretic Mobius function by trial division.
inline int mu_number(long long n) {
  int sign = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// kappa of the Z/n cover of a bouquet with loop voltages v:
// (1/n) prod_{k=1}^{n-1} sum_e 4 sin^2(pi k v_e / n), rounded.
inline long long cyclic_bouquet_kappa(int n, const std::vector<int>& v) {
  long double prod = 1.0L;
  const long double pi = std::acos(-1.0L);
  for (int k = 1; k < n; ++k) {
    long double s = 0;
    for (int x : v) {
      const long double t = std::sin(pi * k * x / n);
      s += 4 * t * t;
    }
    prod *= s;
  }
  return std::llround(prod / n);
}

}  // namespace oracle
