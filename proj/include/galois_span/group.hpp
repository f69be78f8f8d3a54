#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <cctype>
#include <fstream>
#include <regex>

#include <json.hpp>

#include "error.hpp"

namespace galois_span {

using Permutation = std::vector<int>;  // one-line notation, 0-based points

// Largest group order accepted by subgroup enumeration and character tables.
inline int& order_limit() {
  static int limit = 128;
  return limit;
}

// Finite group stored as a Cayley table. Element indices are canonical: every
// constructor fixes its ordering and all downstream matrices follow it.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}, {"1"}, "C1") {}

  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels, std::string name,
              std::vector<Permutation> perms = {})
      : n_(order), table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)),
        perms_(std::move(perms)) {
    validate();
  }

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& label(int a) const { return labels_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& table() const { return table_; }

  // Non-empty only for groups built from permutations.
  const std::vector<Permutation>& permutations() const { return perms_; }

  // conj(g, x) = g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  int power(int a, long long k) const {
    if (k < 0) return power(inv(a), -k);
    int r = identity_;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  // Resolves an element from its label, its decimal index, or (for
  // permutation groups) cycle notation such as "(12)" or "(1 2 3)".
  std::optional<int> find(std::string_view text) const;

  int element(std::string_view text) const {
    auto e = find(text);
    if (!e) fail(Errc::ParseError, "no element '" + std::string(text) + "' in " + name_);
    return *e;
  }

  bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  void validate();

  int n_ = 0;
  std::vector<int> table_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<Permutation> perms_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

inline void FiniteGroup::validate() {
  if (n_ < 1) fail(Errc::InvalidTable, "group order must be positive");
  const auto n = static_cast<std::size_t>(n_);
  if (table_.size() != n * n) fail(Errc::InvalidTable, "Cayley table must be n x n");
  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n) fail(Errc::InvalidTable, "label count mismatch");
  for (int x : table_)
    if (x < 0 || x >= n_) fail(Errc::InvalidTable, "table entry out of range");
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(table_[i * n + j])] = true;
      col[static_cast<std::size_t>(table_[j * n + i])] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() || std::find(col.begin(), col.end(), false) != col.end())
      fail(Errc::InvalidTable, "rows and columns must be permutations");
  }
  identity_ = -1;
  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) fail(Errc::InvalidTable, "no identity element");
  inverse_.assign(n, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_) fail(Errc::InvalidTable, "inverse is not two-sided");
        inverse_[static_cast<std::size_t>(a)] = b;
      }
  auto assoc = [&](int a, int b, int c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (!assoc(a, b, c)) fail(Errc::InvalidTable, "table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int k = 0; k < 200000; ++k) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
      if (!assoc(a, b, c)) fail(Errc::InvalidTable, "table is not associative");
    }
  }
  if (!perms_.empty() && perms_.size() != n) fail(Errc::InvalidTable, "permutation realization size mismatch");
}

namespace detail {

inline std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Parses "(1 2 3)(4 5)", "(1,2,3)" or, when degree < 10, "(123)".
inline Permutation parse_cycles(std::string_view text, int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  std::string s = trim(text);
  if (s.empty() || s == "()" || s == "1" || s == "e") return p;
  std::size_t i = 0;
  auto bad = [&] { fail(Errc::ParseError, "bad cycle notation '" + std::string(text) + "'"); };
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    if (s[i] != '(') bad();
    std::size_t close = s.find(')', i);
    if (close == std::string::npos) bad();
    std::string body = s.substr(i + 1, close - i - 1);
    std::vector<int> cyc;
    bool has_sep = body.find_first_of(", ") != std::string::npos;
    if (has_sep) {
      std::string tok;
      for (char c : body + ",") {
        if (c == ',' || c == ' ') {
          if (!tok.empty()) cyc.push_back(std::stoi(tok));
          tok.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          tok += c;
        } else {
          bad();
        }
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) bad();
        cyc.push_back(c - '0');
      }
    }
    for (int x : cyc)
      if (x < 1 || x > degree) fail(Errc::ParseError, "cycle point " + std::to_string(x) + " out of range");
    std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
    for (int x : cyc) {
      if (used[static_cast<std::size_t>(x)]) bad();
      used[static_cast<std::size_t>(x)] = true;
    }
    // Cycles are composed right-to-left like the group product.
    Permutation c(static_cast<std::size_t>(degree));
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k)
      c[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()] - 1;
    Permutation composed(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) composed[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(c[static_cast<std::size_t>(x)])];
    p = composed;
    i = close + 1;
  }
  return p;
}

}  // namespace detail

inline std::optional<int> FiniteGroup::find(std::string_view text) const {
  const std::string t = detail::trim(text);
  for (int i = 0; i < n_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == t) return i;
  if (!t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    long v = std::stol(t);
    if (v >= 0 && v < n_) return static_cast<int>(v);
    return std::nullopt;
  }
  if (!perms_.empty() && !t.empty() && t.front() == '(') {
    try {
      Permutation p = detail::parse_cycles(t, static_cast<int>(perms_.front().size()));
      for (int i = 0; i < n_; ++i)
        if (perms_[static_cast<std::size_t>(i)] == p) return i;
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructors

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "cyclic group order must be >= 1");
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return FiniteGroup(n, std::move(t), {}, "C" + std::to_string(n));
}

// Elements are pairs (a, b) indexed a * |G2| + b, labelled "(a,b)".
inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) labels.push_back("(" + g1.label(a) + "," + g2.label(b) + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x * n + y)] = g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2);
  return FiniteGroup(n, std::move(t), std::move(labels), g1.name() + "x" + g2.name());
}

// Dihedral group of order 2n; element r^k s^f has index f * n + k.
inline FiniteGroup dihedral(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "dihedral parameter must be >= 1");
  const int order = 2 * n;
  auto label = [&](int k, int f) {
    std::string s;
    if (k == 1) s = "r";
    else if (k > 1) s = "r^" + std::to_string(k);
    if (f) s += "s";
    return s.empty() ? std::string("1") : s;
  };
  std::vector<std::string> labels;
  for (int f = 0; f < 2; ++f)
    for (int k = 0; k < n; ++k) labels.push_back(label(k, f));
  std::vector<int> t(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int k1 = x % n, f1 = x / n, k2 = y % n, f2 = y / n;
      // r^k1 s^f1 r^k2 s^f2 = r^(k1 + (-1)^f1 k2) s^(f1 + f2)
      int k = ((k1 + (f1 ? -k2 : k2)) % n + n) % n;
      t[static_cast<std::size_t>(x * order + y)] = ((f1 + f2) % 2) * n + k;
    }
  return FiniteGroup(order, std::move(t), std::move(labels), "D" + std::to_string(n));
}

// Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>.
// Element a^k x^f has index f * 2n + k. Dic2 is Q8 and gets quaternion labels.
inline FiniteGroup dicyclic(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "dicyclic parameter must be >= 1");
  const int m = 2 * n, order = 4 * n;
  std::vector<std::string> labels;
  if (n == 2) {
    labels = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  } else {
    for (int f = 0; f < 2; ++f)
      for (int k = 0; k < m; ++k) {
        std::string s = k == 0 ? "" : (k == 1 ? "a" : "a^" + std::to_string(k));
        if (f) s += "x";
        labels.push_back(s.empty() ? "1" : s);
      }
  }
  std::vector<int> t(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int p = 0; p < order; ++p)
    for (int q = 0; q < order; ++q) {
      int k1 = p % m, f1 = p / m, k2 = q % m, f2 = q / m;
      int k, f;
      if (!f1) {
        k = k1 + k2;
        f = f2;
      } else if (!f2) {
        k = k1 - k2;
        f = 1;
      } else {
        k = k1 - k2 + n;
        f = 0;
      }
      t[static_cast<std::size_t>(p * order + q)] = f * m + ((k % m) + m) % m;
    }
  return FiniteGroup(order, std::move(t), std::move(labels), n == 2 ? "Q8" : "Dic" + std::to_string(n));
}

// Closure of permutation generators. Elements are sorted by one-line
// notation; the product a*b applies b first, then a.
inline FiniteGroup from_permutations(const std::vector<Permutation>& gens, int degree, std::string name,
                                     std::size_t max_size = 512) {
  if (degree < 1) fail(Errc::InvalidArgument, "permutation degree must be >= 1");
  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation c(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) c[static_cast<std::size_t>(x)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(x)])];
    return c;
  };
  for (const Permutation& g : gens) {
    if (g.size() != static_cast<std::size_t>(degree)) fail(Errc::InvalidArgument, "generator has wrong degree");
    Permutation s = g;
    std::sort(s.begin(), s.end());
    for (int x = 0; x < degree; ++x)
      if (s[static_cast<std::size_t>(x)] != x) fail(Errc::InvalidArgument, "generator is not a permutation");
  }
  Permutation id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier)
      for (const Permutation& g : gens) {
        Permutation q = compose(p, g);
        if (seen.insert(q).second) {
          if (seen.size() > max_size)
            fail(Errc::ClosureTooLarge, "permutation closure exceeds " + std::to_string(max_size) + " elements");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> elems(seen.begin(), seen.end());
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a * n + b)] = index.at(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  std::vector<std::string> labels;
  for (const Permutation& p : elems) labels.push_back(detail::cycle_notation(p));
  return FiniteGroup(n, std::move(t), std::move(labels), std::move(name), std::move(elems));
}

inline FiniteGroup symmetric(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "symmetric degree must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens = {t, c};
  }
  return from_permutations(gens, n, "S" + std::to_string(n), 1u << 20);
}

inline FiniteGroup alternating(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "alternating degree must be >= 1");
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) {  // 3-cycles (0 1 i)
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = static_cast<std::size_t>(i) < p.size() ? i : 1;
    p[static_cast<std::size_t>(i)] = 0;
    gens.push_back(p);
  }
  return from_permutations(gens, n, "A" + std::to_string(n), 1u << 20);
}

inline FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table, std::string name = "table") {
  const std::size_t n = table.size();
  std::vector<int> flat;
  for (const auto& row : table) {
    if (row.size() != n) fail(Errc::InvalidTable, "Cayley table must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteGroup(static_cast<int>(n), std::move(flat), {}, std::move(name));
}

// ---------------------------------------------------------------------------
// Elements

inline int element_order(const FiniteGroup& g, int a) {
  int k = 1;
  for (int x = a; x != g.identity(); x = g.mul(x, a)) ++k;
  return k;
}

inline int exponent(const FiniteGroup& g) {
  int e = 1;
  for (int a = 0; a < g.order(); ++a) e = std::lcm(e, element_order(g, a));
  return e;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

inline bool is_cyclic(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    if (element_order(g, a) == g.order()) return true;
  return false;
}

// Conjugacy classes ordered by least element (the identity class first when
// the identity has index 0, which holds for every built-in constructor).
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a) {
    if (cls[static_cast<std::size_t>(a)] >= 0) continue;
    std::set<int> c;
    for (int x = 0; x < g.order(); ++x) c.insert(g.conj(x, a));
    for (int y : c) cls[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

// A subgroup as its sorted element-index set; ordered by (order, elements).
struct Subgroup {
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int a) const { return std::binary_search(elements.begin(), elements.end(), a); }
  bool is_subset_of(const Subgroup& o) const {
    return std::includes(o.elements.begin(), o.elements.end(), elements.begin(), elements.end());
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  }
};

inline Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  std::vector<int> elems{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      if (s < 0 || s >= g.order()) fail(Errc::IndexOutOfRange, "generator index out of range");
      int p = g.mul(elems[i], s);
      if (!in[static_cast<std::size_t>(p)]) {
        in[static_cast<std::size_t>(p)] = true;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems)};
}

inline Subgroup generated_subgroup(const FiniteGroup& g, std::initializer_list<int> gens) {
  std::vector<int> v(gens);
  return generated_subgroup(g, std::span<const int>(v));
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(all)};
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.elements.empty() || !h.contains(g.identity())) return false;
  if (!std::is_sorted(h.elements.begin(), h.elements.end())) return false;
  for (int a : h.elements) {
    if (!h.contains(g.inv(a))) return false;
    for (int b : h.elements)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

inline void require_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) fail(Errc::NotASubgroup, "element set is not a subgroup of " + g.name());
}

inline std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> found;
  for (int a = 0; a < g.order(); ++a) found.insert(generated_subgroup(g, {a}));
  return {found.begin(), found.end()};
}

// Cyclic subgroups closed under pairwise joins until nothing new appears.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_order = order_limit()) {
  if (g.order() > max_order)
    fail(Errc::OrderTooLarge, "subgroup enumeration limited to order " + std::to_string(max_order));
  std::set<Subgroup> found;
  for (const Subgroup& c : cyclic_subgroups(g)) found.insert(c);
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> current(found.begin(), found.end());
    std::vector<Subgroup> next;
    for (const Subgroup& a : frontier)
      for (const Subgroup& b : current) {
        if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
        std::vector<int> gens;
        std::set_union(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                       std::back_inserter(gens));
        Subgroup j = generated_subgroup(g, std::span<const int>(gens));
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline int index(const FiniteGroup& g, const Subgroup& h) { return g.order() / h.order(); }

inline Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x) {
  std::vector<int> e;
  for (int a : h.elements) e.push_back(g.conj(x, a));
  std::sort(e.begin(), e.end());
  return Subgroup{std::move(e)};
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x)
    if (!(conjugate(g, h, x) == h)) return false;
  return true;
}

inline bool are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  if (h1.order() != h2.order()) return false;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate(g, h1, x) == h2) return true;
  return false;
}

// Cosets H g, sorted by least element; each coset is itself sorted.
inline std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.order(); ++x) {
    if (used[static_cast<std::size_t>(x)]) continue;
    std::vector<int> c;
    for (int a : h.elements) c.push_back(g.mul(a, x));
    std::sort(c.begin(), c.end());
    for (int y : c) used[static_cast<std::size_t>(y)] = true;
    out.push_back(std::move(c));
  }
  return out;
}

// coset_index[x] = position of H x in left_cosets(g, h).
inline std::vector<int> coset_index(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> idx(static_cast<std::size_t>(g.order()), -1);
  auto cosets = left_cosets(g, h);
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i]) idx[static_cast<std::size_t>(x)] = static_cast<int>(i);
  return idx;
}

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;  // element of G -> element of G/H
};

inline QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup(g, h);
  if (!is_normal(g, h)) fail(Errc::NotNormal, "quotient by a non-normal subgroup");
  auto cosets = left_cosets(g, h);
  std::vector<int> proj = coset_index(g, h);
  const int n = static_cast<int>(cosets.size());
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back("H" + g.label(cosets[static_cast<std::size_t>(a)].front()));
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a * n + b)] =
          proj[static_cast<std::size_t>(g.mul(cosets[static_cast<std::size_t>(a)].front(), cosets[static_cast<std::size_t>(b)].front()))];
  }
  return {FiniteGroup(n, std::move(t), std::move(labels), g.name() + "/H"), std::move(proj)};
}

inline std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    if (i) s += ", ";
    s += g.label(h.elements[i]);
  }
  return s + "}";
}

// GroupSpec grammar:
//   C<n> D<n> Q8 Q<4k> Dic<n> S<n> A<n>, powers such as C2^3, products joined
//   by 'x', perm:(cycles);(cycles), table:<path to JSON n x n array>.
FiniteGroup parse_group_spec(std::string_view spec);

namespace detail {

inline FiniteGroup parse_group_factor(const std::string& f) {
  static const std::regex re(R"(^(C|D|Q|Dic|S|A)(\d+)(?:\^(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(f, m, re)) fail(Errc::ParseError, "unknown group factor '" + f + "'");
  const std::string kind = m[1];
  const int n = std::stoi(m[2]);
  FiniteGroup base;
  if (kind == "C") base = cyclic_group(n);
  else if (kind == "D") base = dihedral(n);
  else if (kind == "Dic") base = dicyclic(n);
  else if (kind == "S") base = symmetric(n);
  else if (kind == "A") base = alternating(n);
  else {
    if (n < 8 || n % 4 != 0) fail(Errc::ParseError, "Q<n> needs n divisible by 4 and n >= 8");
    base = dicyclic(n / 4);
    if (n != 8) base = FiniteGroup(base.order(), base.table(), base.labels(), "Q" + std::to_string(n));
  }
  if (m[3].matched) {
    const int k = std::stoi(m[3]);
    if (k < 1) fail(Errc::ParseError, "group power must be >= 1");
    FiniteGroup g = base;
    for (int i = 1; i < k; ++i) g = direct_product(g, base);
    return FiniteGroup(g.order(), g.table(), g.labels(), f);
  }
  return base;
}

inline FiniteGroup parse_perm_spec(const std::string& body, const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : body + ";") {
    if (c == ';') {
      if (!trim(cur).empty()) parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  int degree = 1;
  for (const auto& p : parts) {
    std::string digits;
    bool spaced = p.find_first_of(", ") != std::string::npos;
    for (char c : p + " ") {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (!spaced) {
          degree = std::max(degree, c - '0');
          digits.clear();
        }
      } else if (!digits.empty()) {
        degree = std::max(degree, std::stoi(digits));
        digits.clear();
      }
    }
  }
  std::vector<Permutation> gens;
  for (const auto& p : parts) gens.push_back(parse_cycles(p, degree));
  return from_permutations(gens, degree, name);
}

}  // namespace detail

inline FiniteGroup parse_group_spec(std::string_view spec_view) {
  const std::string spec = detail::trim(spec_view);
  if (spec.rfind("perm:", 0) == 0) return detail::parse_perm_spec(spec.substr(5), spec);
  if (spec.rfind("table:", 0) == 0) {
    const std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open Cayley table '" + path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& ex) {
      fail(Errc::ParseError, std::string("bad Cayley table JSON: ") + ex.what());
    }
    return from_cayley_table(j.get<std::vector<std::vector<int>>>(), spec);
  }
  if (spec.empty()) fail(Errc::ParseError, "empty group spec");
  std::vector<std::string> factors;
  std::string cur;
  for (char c : spec + "x") {
    if (c == 'x') {
      if (cur.empty()) fail(Errc::ParseError, "empty factor in '" + spec + "'");
      factors.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  FiniteGroup g = detail::parse_group_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, detail::parse_group_factor(factors[i]));
  if (factors.size() > 1) g = FiniteGroup(g.order(), g.table(), g.labels(), spec);
  return g;
}

}  // namespace galois_span
