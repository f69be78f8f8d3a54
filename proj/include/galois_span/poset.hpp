#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"

namespace galois_span {

// Finite poset on elements 0..n-1; leq(i, j) means i <= j.
class Poset {
 public:
  Poset() = default;
  Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {
    validate();
  }

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) fail(Errc::InvalidArgument, "no poset element '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  bool covers(std::size_t lo, std::size_t hi) const {
    if (!less(lo, hi)) return false;
    for (std::size_t z = 0; z < size(); ++z)
      if (less(lo, z) && less(z, hi)) return false;
    return true;
  }

  // Linear extension: every element precedes everything strictly above it.
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> below(size(), 0), order(size());
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) below[a] += leq_[b][a];
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
    return order;
  }

 private:
  void validate() const {
    const std::size_t n = labels_.size();
    if (leq_.size() != n) fail(Errc::InvalidPoset, "relation size mismatch");
    for (const auto& row : leq_)
      if (row.size() != n) fail(Errc::InvalidPoset, "relation must be square");
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq_[a][a]) fail(Errc::InvalidPoset, "relation is not reflexive");
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq_[a][b] && leq_[b][a]) fail(Errc::InvalidPoset, "relation is not antisymmetric");
        if (!leq_[a][b]) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (leq_[b][c] && !leq_[a][c]) fail(Errc::InvalidPoset, "relation is not transitive");
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

// mu(x, y) for all x <= y; zero elsewhere.
class MobiusTable {
 public:
  MobiusTable() = default;
  explicit MobiusTable(std::vector<std::vector<BigInt>> mu) : mu_(std::move(mu)) {}

  const BigInt& operator()(std::size_t x, std::size_t y) const { return mu_[x][y]; }
  std::size_t size() const { return mu_.size(); }

 private:
  std::vector<std::vector<BigInt>> mu_;
};

// Both defining recursions, sum_{x<=z<=y} mu(x,z) = 0 and
// sum_{x<=z<=y} mu(z,y) = 0 for x < y, are evaluated and must agree.
inline MobiusTable mobius(const Poset& p) {
  const std::size_t n = p.size();
  const std::vector<std::size_t> ext = p.linear_extension();
  std::vector<std::vector<BigInt>> lower(n, std::vector<BigInt>(n, BigInt(0))), upper = lower;
  for (std::size_t x = 0; x < n; ++x) {
    lower[x][x] = 1;
    for (std::size_t y : ext) {
      if (!p.less(x, y)) continue;
      BigInt s = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (p.leq(x, z) && p.less(z, y)) s += lower[x][z];
      lower[x][y] = -s;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    upper[y][y] = 1;
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
      const std::size_t x = *it;
      if (!p.less(x, y)) continue;
      BigInt s = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (p.less(x, z) && p.leq(z, y)) s += upper[z][y];
      upper[x][y] = -s;
    }
  }
  if (lower != upper) fail(Errc::InternalInconsistency, "Mobius recursions disagree");
  return MobiusTable(std::move(lower));
}

// Number-theoretic Mobius function.
inline int classical_mobius(long long n) {
  if (n < 1) fail(Errc::InvalidArgument, "classical Mobius needs n >= 1");
  int sign = 1;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline Poset chain_poset(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return Poset(std::move(labels), std::move(leq));
}

inline Poset divisor_poset(long long n) {
  std::vector<long long> divs;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(divs.size(), std::vector<bool>(divs.size(), false));
  for (std::size_t i = 0; i < divs.size(); ++i) {
    labels.push_back(std::to_string(divs[i]));
    for (std::size_t j = 0; j < divs.size(); ++j) leq[i][j] = divs[j] % divs[i] == 0;
  }
  return Poset(std::move(labels), std::move(leq));
}

namespace detail {

inline Poset adjoin(const Poset& p, const std::string& label, bool bottom) {
  for (const auto& l : p.labels())
    if (l == label) fail(Errc::InvalidArgument, "adjoined label '" + label + "' is not fresh");
  const std::size_t n = p.size();
  std::vector<std::string> labels = p.labels();
  labels.push_back(label);
  std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = p.leq(a, b);
  for (std::size_t a = 0; a <= n; ++a) {
    if (bottom) leq[n][a] = true;
    else leq[a][n] = true;
  }
  return Poset(std::move(labels), std::move(leq));
}

}  // namespace detail

// New element, appended last, below every existing element.
inline Poset adjoin_bottom(const Poset& p, const std::string& label = "∅") { return detail::adjoin(p, label, true); }

// New element, appended last, above every existing element.
inline Poset adjoin_top(const Poset& p, const std::string& label = "∞") { return detail::adjoin(p, label, false); }

// Checks both inversion directions for f:
//   g(y) = sum_{x<=y} f(x)  =>  f(y) = sum_{x<=y} g(x) mu(x,y)
//   g(x) = sum_{y>=x} f(y)  =>  f(x) = sum_{y>=x} mu(x,y) g(y)
// and the converse of the first with f treated as the summed function.
inline bool mobius_inversion_check(const Poset& p, const std::vector<Rational>& f) {
  const std::size_t n = p.size();
  if (f.size() != n) fail(Errc::LengthMismatch, "function size differs from poset size");
  const MobiusTable mu = mobius(p);
  std::vector<Rational> g_lo(n, 0), g_hi(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) {
        g_lo[y] += f[x];
        g_hi[x] += f[y];
      }
  for (std::size_t y = 0; y < n; ++y) {
    Rational lo = 0, hi = 0, conv = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (p.leq(x, y)) lo += g_lo[x] * Rational(mu(x, y));
      if (p.leq(y, x)) hi += Rational(mu(y, x)) * g_hi[x];
    }
    if (lo != f[y] || hi != f[y]) return false;
    // converse: h = mu * f must sum back to f
    for (std::size_t x = 0; x < n; ++x) {
      if (!p.leq(x, y)) continue;
      Rational h = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (p.leq(z, x)) h += f[z] * Rational(mu(z, x));
      conv += h;
    }
    if (conv != f[y]) return false;
  }
  return true;
}

inline std::string hasse_dot(const Poset& p, const std::string& name = "poset") {
  auto q = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph " + q(name) + " {\n  rankdir=BT;\n";
  for (std::size_t a = 0; a < p.size(); ++a) out += "  n" + std::to_string(a) + " [label=" + q(p.label(a)) + "];\n";
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.covers(a, b)) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

inline nlohmann::ordered_json mobius_json(const Poset& p, const MobiusTable& mu) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) rows.push_back({{"from", p.label(x)}, {"to", p.label(y)}, {"mu", mu(x, y).str()}});
  return rows;
}

}  // namespace galois_span
