#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"

namespace galois_span {

namespace detail {

// Arithmetic in Z/p with p < 2^32.
struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const {
    std::uint64_t r = 1;
    a %= p;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % p == 0) fail(Errc::InternalInconsistency, "inverse of zero mod p");
    return pow(a, p - 2);
  }
  std::uint64_t from(long long v) const { return static_cast<std::uint64_t>(((v % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p)); }
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using FpMatrix = std::vector<std::vector<std::uint64_t>>;

// Basis (as rows) of the null space of m over F_p.
inline FpMatrix fp_nullspace(FpMatrix m, std::size_t cols, const Fp& f) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const std::uint64_t iv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t k = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(k, m[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  FpMatrix basis;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.sub(0, m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves coords * basis = v for a vector v inside the row span of basis.
inline std::vector<std::uint64_t> fp_coordinates(const FpMatrix& basis, const std::vector<std::uint64_t>& v, const Fp& f) {
  const std::size_t k = basis.size(), n = v.size();
  // columns: basis vectors, augmented with v
  FpMatrix a(n, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = v[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pc;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    const std::uint64_t iv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, iv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t m = a[i][c];
      for (std::size_t j = 0; j <= k; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
    }
    pc.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][k] != 0) fail(Errc::InternalInconsistency, "vector outside invariant subspace");
  std::vector<std::uint64_t> x(k, 0);
  for (std::size_t i = 0; i < pc.size(); ++i) x[pc[i]] = a[i][k];
  return x;
}

}  // namespace detail

// Irreducible character. mult[k][m] is the multiplicity of zeta_e^m among the
// eigenvalues of rho(g) for g in class k; the entries of each row sum to degree.
struct Character {
  int degree = 0;
  int e = 1;
  std::vector<std::vector<int>> mult;

  CyclotomicInt value(std::size_t cls) const {
    std::vector<BigInt> c(static_cast<std::size_t>(e), BigInt(0));
    for (std::size_t m = 0; m < mult[cls].size(); ++m) c[m] = mult[cls][m];
    return CyclotomicInt(e, c);
  }

  std::vector<CyclotomicInt> values() const {
    std::vector<CyclotomicInt> v;
    for (std::size_t k = 0; k < mult.size(); ++k) v.push_back(value(k));
    return v;
  }

  bool is_trivial() const {
    for (const auto& row : mult)
      if (row[0] != 1 || degree != 1) return false;
    return true;
  }
};

// Rational value per conjugacy class.
struct ClassFunction {
  std::vector<Rational> values;
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }
};

struct CharacterTable {
  FiniteGroup group;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;       // element -> class
  std::vector<int> inverse_class;  // class of g^-1
  int e = 1;
  std::uint64_t prime = 0;
  std::vector<Character> characters;  // trivial first

  std::size_t class_count() const { return classes.size(); }
  int class_size(std::size_t k) const { return static_cast<int>(classes[k].size()); }
  int representative(std::size_t k) const { return classes[k].front(); }
  const Character& trivial() const { return characters.front(); }
};

inline constexpr std::uint64_t kDefaultCharacterSeed = 0x9e3779b97f4a7c15ull;

inline CharacterTable character_table(const FiniteGroup& g, int max_order = order_limit(),
                                      std::uint64_t seed = kDefaultCharacterSeed) {
  if (g.order() > max_order)
    fail(Errc::OrderTooLarge, "character tables limited to order " + std::to_string(max_order));
  CharacterTable ct;
  ct.group = g;
  ct.classes = conjugacy_classes(g);
  const std::size_t r = ct.classes.size();
  const int n = g.order();
  ct.class_of.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < r; ++k)
    for (int x : ct.classes[k]) ct.class_of[static_cast<std::size_t>(x)] = static_cast<int>(k);
  for (std::size_t k = 0; k < r; ++k)
    ct.inverse_class.push_back(ct.class_of[static_cast<std::size_t>(g.inv(ct.classes[k].front()))]);
  ct.e = exponent(g);
  const std::size_t id_cls = static_cast<std::size_t>(ct.class_of[static_cast<std::size_t>(g.identity())]);

  // prime p = 1 mod e with p > 2 sqrt(|G|)
  std::uint64_t p = 0;
  for (std::uint64_t k = 1; k < 1000000; ++k) {
    const std::uint64_t cand = k * static_cast<std::uint64_t>(ct.e) + 1;
    if (cand * cand > 4ull * static_cast<std::uint64_t>(n) && detail::is_prime_u64(cand)) {
      p = cand;
      break;
    }
  }
  if (p == 0 || p >= (1ull << 31)) fail(Errc::NoSuitablePrime, "no prime found for exponent " + std::to_string(ct.e));
  ct.prime = p;
  const detail::Fp f{p};

  // (M_j)_{ik} = #{x in C_j : x^-1 g_k in C_i}
  std::vector<detail::FpMatrix> cm(r, detail::FpMatrix(r, std::vector<std::uint64_t>(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      const int gk = ct.classes[k].front();
      for (int x : ct.classes[j]) {
        const std::size_t i = static_cast<std::size_t>(ct.class_of[static_cast<std::size_t>(g.mul(g.inv(x), gk))]);
        cm[j][i][k] = f.add(cm[j][i][k], 1);
      }
    }

  // Split F_p^r into common eigenspaces. Subspaces are stored as row bases.
  std::vector<detail::FpMatrix> spaces;
  {
    detail::FpMatrix full(r, std::vector<std::uint64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(full);
  }
  std::mt19937_64 rng(seed);
  auto split_with = [&](const detail::FpMatrix& m) {
    std::vector<detail::FpMatrix> next;
    for (const auto& basis : spaces) {
      const std::size_t k = basis.size();
      if (k == 1) {
        next.push_back(basis);
        continue;
      }
      // restriction of m to span(basis) in basis coordinates: column c = coords(m * b_c)
      std::vector<std::vector<std::uint64_t>> restricted(k, std::vector<std::uint64_t>(k, 0));
      for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::uint64_t> img(r, 0);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t t = 0; t < r; ++t) img[i] = f.add(img[i], f.mul(m[i][t], basis[c][t]));
        auto coords = detail::fp_coordinates(basis, img, f);
        for (std::size_t i = 0; i < k; ++i) restricted[i][c] = coords[i];
      }
      std::size_t covered = 0;
      std::vector<detail::FpMatrix> pieces;
      for (std::uint64_t lambda = 0; lambda < p && covered < k; ++lambda) {
        detail::FpMatrix shifted = restricted;
        for (std::size_t i = 0; i < k; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        detail::FpMatrix null = detail::fp_nullspace(shifted, k, f);
        if (null.empty()) continue;
        detail::FpMatrix piece;
        for (const auto& coords : null) {
          std::vector<std::uint64_t> v(r, 0);
          for (std::size_t c = 0; c < k; ++c)
            for (std::size_t t = 0; t < r; ++t) v[t] = f.add(v[t], f.mul(coords[c], basis[c][t]));
          piece.push_back(std::move(v));
        }
        covered += piece.size();
        pieces.push_back(std::move(piece));
      }
      if (covered != k) fail(Errc::InternalInconsistency, "class matrix not diagonalizable over F_p");
      for (auto& pc : pieces) next.push_back(std::move(pc));
    }
    spaces = std::move(next);
  };
  auto done = [&] { return spaces.size() == r; };
  for (int attempt = 0; attempt < 3 && !done(); ++attempt) {
    detail::FpMatrix comb(r, std::vector<std::uint64_t>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t c = rng() % p;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) comb[i][k] = f.add(comb[i][k], f.mul(c, cm[j][i][k]));
    }
    split_with(comb);
  }
  for (std::size_t j = 0; j < r && !done(); ++j) split_with(cm[j]);
  if (!done()) fail(Errc::InternalInconsistency, "eigenspaces failed to split");

  // primitive e-th root of unity mod p
  std::uint64_t omega = 0;
  for (std::uint64_t x = 2; x < p && !omega; ++x) {
    const std::uint64_t w = f.pow(x, (p - 1) / static_cast<std::uint64_t>(ct.e));
    bool primitive = true;
    for (int q = 1; q < ct.e && primitive; ++q)
      if (ct.e % q == 0 && f.pow(w, static_cast<std::uint64_t>(q)) == 1) primitive = false;
    if (primitive) omega = w;
  }
  if (ct.e == 1) omega = 1;
  const std::uint64_t e_inv = f.inv(static_cast<std::uint64_t>(ct.e));

  for (const auto& sp : spaces) {
    std::vector<std::uint64_t> w = sp.front();
    if (w[id_cls] == 0) fail(Errc::InternalInconsistency, "eigenvector vanishes at the identity class");
    const std::uint64_t s = f.inv(w[id_cls]);
    for (auto& x : w) x = f.mul(x, s);
    std::uint64_t denom = 0;
    for (std::size_t k = 0; k < r; ++k)
      denom = f.add(denom, f.mul(f.mul(w[k], w[static_cast<std::size_t>(ct.inverse_class[k])]),
                                 f.inv(static_cast<std::uint64_t>(ct.class_size(k)))));
    const std::uint64_t d2 = f.mul(static_cast<std::uint64_t>(n), f.inv(denom));
    int d = 0;
    for (int cand = 1; cand * cand <= n; ++cand)
      if (static_cast<std::uint64_t>(cand) * static_cast<std::uint64_t>(cand) % p == d2) d = cand;
    if (d == 0) fail(Errc::InternalInconsistency, "character degree not recovered");
    std::vector<std::uint64_t> chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = f.mul(f.mul(static_cast<std::uint64_t>(d), w[k]), f.inv(static_cast<std::uint64_t>(ct.class_size(k))));
    Character c;
    c.degree = d;
    c.e = ct.e;
    for (std::size_t k = 0; k < r; ++k) {
      const int gk = ct.classes[k].front();
      std::vector<int> mult(static_cast<std::size_t>(ct.e), 0);
      int total = 0;
      for (int m = 0; m < ct.e; ++m) {
        std::uint64_t acc = 0;
        int x = g.identity();
        for (int j = 0; j < ct.e; ++j) {
          const std::uint64_t val = chi[static_cast<std::size_t>(ct.class_of[static_cast<std::size_t>(x)])];
          const std::uint64_t tw = f.pow(omega, static_cast<std::uint64_t>((static_cast<long long>(j) * (ct.e - m)) % ct.e));
          acc = f.add(acc, f.mul(val, tw));
          x = g.mul(x, gk);
        }
        acc = f.mul(acc, e_inv);
        if (acc > static_cast<std::uint64_t>(d)) fail(Errc::InternalInconsistency, "eigenvalue multiplicity out of range");
        mult[static_cast<std::size_t>(m)] = static_cast<int>(acc);
        total += static_cast<int>(acc);
      }
      if (total != d) fail(Errc::InternalInconsistency, "multiplicities do not sum to the degree");
      c.mult.push_back(std::move(mult));
    }
    ct.characters.push_back(std::move(c));
  }
  std::sort(ct.characters.begin(), ct.characters.end(), [](const Character& a, const Character& b) {
    if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.mult < b.mult;
  });
  return ct;
}

// <phi, psi> = (1/|G|) sum_k |C_k| phi(g_k) conj(psi(g_k)).
inline Rational inner_product(const CharacterTable& ct, const Character& a, const Character& b) {
  if (a.mult.size() != ct.class_count() || b.mult.size() != ct.class_count())
    fail(Errc::MismatchedGroup, "characters belong to a different group");
  CyclotomicInt acc;
  for (std::size_t k = 0; k < ct.class_count(); ++k)
    acc += CyclotomicInt(static_cast<long>(ct.class_size(k))) * a.value(k) * b.value(k).conj();
  auto v = acc.as_integer();
  if (!v) fail(Errc::InternalInconsistency, "inner product of characters is not rational");
  return Rational(*v, ct.group.order());
}

inline Rational inner_product(const CharacterTable& ct, const ClassFunction& phi, const Character& psi) {
  if (phi.values.size() != ct.class_count() || psi.mult.size() != ct.class_count())
    fail(Errc::MismatchedGroup, "class function belongs to a different group");
  BigInt l = 1;
  for (const Rational& v : phi.values) l = lcm(l, denominator(v));
  CyclotomicInt acc;
  for (std::size_t k = 0; k < ct.class_count(); ++k) {
    const BigInt scaled = numerator(phi.values[k] * Rational(l));
    acc += CyclotomicInt(scaled * ct.class_size(k)) * psi.value(k).conj();
  }
  auto v = acc.as_integer();
  if (!v) fail(Errc::NotRationalValued, "inner product is not rational");
  return Rational(*v, BigInt(ct.group.order()) * l);
}

inline Rational inner_product(const CharacterTable& ct, const ClassFunction& a, const ClassFunction& b) {
  if (a.values.size() != ct.class_count() || b.values.size() != ct.class_count())
    fail(Errc::MismatchedGroup, "class function belongs to a different group");
  Rational acc = 0;
  for (std::size_t k = 0; k < ct.class_count(); ++k)
    acc += Rational(ct.class_size(k)) * a.values[k] * b.values[static_cast<std::size_t>(ct.inverse_class[k])];
  return acc / ct.group.order();
}

inline Subgroup kernel_of(const CharacterTable& ct, const Character& chi) {
  std::vector<int> elems;
  for (int x = 0; x < ct.group.order(); ++x)
    if (chi.mult[static_cast<std::size_t>(ct.class_of[static_cast<std::size_t>(x)])][0] == chi.degree) elems.push_back(x);
  Subgroup h{std::move(elems)};
  if (!is_subgroup(ct.group, h) || !is_normal(ct.group, h))
    fail(Errc::InternalInconsistency, "character kernel is not a normal subgroup");
  return h;
}

// Ind_H^G of the trivial character: value (1/|H|) #{x : x^-1 g x in H}.
inline ClassFunction induced_trivial_character(const CharacterTable& ct, const Subgroup& h) {
  require_subgroup(ct.group, h);
  ClassFunction out;
  const FiniteGroup& g = ct.group;
  for (std::size_t k = 0; k < ct.class_count(); ++k) {
    const int gk = ct.representative(k);
    int count = 0;
    for (int x = 0; x < g.order(); ++x)
      if (h.contains(g.mul(g.mul(g.inv(x), gk), x))) ++count;
    out.values.push_back(Rational(count, h.order()));
  }
  return out;
}

inline ClassFunction trivial_class_function(const CharacterTable& ct) {
  return ClassFunction{std::vector<Rational>(ct.class_count(), Rational(1))};
}

// Rational-valued characters as class functions; empty optional if chi takes
// a non-rational value anywhere.
inline std::optional<ClassFunction> as_class_function(const Character& chi) {
  ClassFunction out;
  for (std::size_t k = 0; k < chi.mult.size(); ++k) {
    auto v = chi.value(k).as_integer();
    if (!v) return std::nullopt;
    out.values.push_back(Rational(*v));
  }
  return out;
}

// Degree-one characters of an abelian group as maps g -> k, rho(g) = zeta_e^k.
inline std::vector<std::vector<int>> one_dim_characters(const CharacterTable& ct) {
  if (!is_abelian(ct.group)) fail(Errc::NotAbelian, ct.group.name() + " is not abelian");
  std::vector<std::vector<int>> out;
  for (const Character& c : ct.characters) {
    std::vector<int> expo(static_cast<std::size_t>(ct.group.order()));
    for (int x = 0; x < ct.group.order(); ++x) {
      const auto& row = c.mult[static_cast<std::size_t>(ct.class_of[static_cast<std::size_t>(x)])];
      expo[static_cast<std::size_t>(x)] = static_cast<int>(std::find(row.begin(), row.end(), 1) - row.begin());
    }
    out.push_back(std::move(expo));
  }
  return out;
}

inline nlohmann::ordered_json character_table_json(const CharacterTable& ct) {
  nlohmann::ordered_json j;
  j["group"] = ct.group.name();
  j["order"] = std::to_string(ct.group.order());
  j["exponent"] = std::to_string(ct.e);
  j["prime"] = std::to_string(ct.prime);
  j["classes"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < ct.class_count(); ++k)
    j["classes"].push_back({{"representative", ct.group.label(ct.representative(k))}, {"size", std::to_string(ct.class_size(k))}});
  j["characters"] = nlohmann::ordered_json::array();
  for (const Character& c : ct.characters) {
    nlohmann::ordered_json cj;
    cj["degree"] = std::to_string(c.degree);
    cj["mult"] = c.mult;
    std::vector<std::string> vals;
    for (std::size_t k = 0; k < c.mult.size(); ++k) vals.push_back(to_string(c.value(k)));
    cj["values"] = vals;
    j["characters"].push_back(cj);
  }
  return j;
}

}  // namespace galois_span
