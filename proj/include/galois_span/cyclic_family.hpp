#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cover.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "report.hpp"

namespace galois_span {

using ExponentVector = std::vector<int>;

inline void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "exponent vectors differ in length");
}

inline ExponentVector exp_join(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline ExponentVector exp_meet(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

// prod p_i^{a_i}
inline BigInt exp_pow(const std::vector<int>& p, const ExponentVector& a) {
  require_same_length(p, a);
  BigInt r = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (a[i] < 0) fail(Errc::InvalidArgument, "negative exponent");
    r *= ipow(BigInt(p[i]), static_cast<std::uint64_t>(a[i]));
  }
  return r;
}

// All vectors 0 <= a <= s in lexicographic order.
inline std::vector<ExponentVector> exponent_grid(const ExponentVector& s) {
  std::vector<ExponentVector> out;
  ExponentVector a(s.size(), 0);
  while (true) {
    out.push_back(a);
    std::size_t i = s.size();
    while (i > 0) {
      --i;
      if (a[i] < s[i]) {
        ++a[i];
        break;
      }
      a[i] = 0;
      if (i == 0) return out;
    }
    if (s.empty()) return out;
  }
}

inline bool is_zero_vector(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

// Bouquet with t+1 loops over Z/p^s; loops 1..t carry p^b, the last loop 1.
struct FamilySpec {
  std::vector<int> p;
  ExponentVector s;
  ExponentVector b;

  void validate() const {
    require_same_length(p, s);
    require_same_length(p, b);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 2 || !detail::is_prime_u64(static_cast<std::uint64_t>(p[i])))
        fail(Errc::InvalidArgument, std::to_string(p[i]) + " is not prime");
      for (std::size_t j = 0; j < i; ++j)
        if (p[i] == p[j]) fail(Errc::InvalidArgument, "primes must be distinct");
      if (s[i] < 0 || b[i] < 0 || b[i] > s[i]) fail(Errc::InvalidArgument, "need 0 <= b <= s");
    }
  }
};

// (prime, exponent) pairs of n.
inline std::pair<std::vector<int>, ExponentVector> factor(long long n) {
  if (n < 1) fail(Errc::InvalidArgument, "factor needs n >= 1");
  std::vector<int> p;
  ExponentVector s;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    int k = 0;
    while (n % q == 0) {
      n /= q;
      ++k;
    }
    p.push_back(static_cast<int>(q));
    s.push_back(k);
  }
  if (n > 1) {
    p.push_back(static_cast<int>(n));
    s.push_back(1);
  }
  return {p, s};
}

inline BigInt bouquet_family_kappa(long long order, long long voltage, int t) {
  if (t < 0) fail(Errc::InvalidArgument, "t must be nonnegative");
  const FiniteGroup g = cyclic_group(static_cast<int>(order));
  std::vector<int> vals(static_cast<std::size_t>(t), static_cast<int>(voltage % order));
  vals.push_back(static_cast<int>(1 % order));
  return spanning_tree_count(derived_graph(make_voltage(bouquet_graph(t + 1), g, vals)).derived);
}

// kappa of the derived graph over Z/p^s.
inline BigInt family_kappa(const FamilySpec& f, int t) {
  f.validate();
  const BigInt n = exp_pow(f.p, f.s);
  return bouquet_family_kappa(n.convert_to<long long>(), exp_pow(f.p, f.b).convert_to<long long>(), t);
}

// p^a (1 - 1/p^{(a-b) v 0})
inline BigInt degree_closed_form(const std::vector<int>& p, const ExponentVector& a, const ExponentVector& b) {
  ExponentVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = std::max(a[i] - b[i], 0);
  return exp_pow(p, a) - exp_pow(p, a) / exp_pow(p, d);
}

struct DegreeResult {
  int degree = 0;
  BigInt closed_form;
  std::vector<BigInt> values;  // kappa at t = 0, 1, ...
  Polynomial<Rational> poly;
};

// kappa over the quotient Z/p^a (voltages p^b mod p^a) sampled at t = 0..D+1
// and interpolated; the degree must equal the closed form D.
inline DegreeResult kappa_polynomial_in_t(const FamilySpec& f, const ExponentVector& a) {
  f.validate();
  require_same_length(f.s, a);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] > f.s[i]) fail(Errc::InvalidArgument, "need 0 <= a <= s");
  DegreeResult r;
  r.closed_form = degree_closed_form(f.p, a, f.b);
  const long long order = exp_pow(f.p, a).convert_to<long long>();
  const long long volt = exp_pow(f.p, f.b).convert_to<long long>();
  const int points = r.closed_form.convert_to<int>() + 2;
  std::vector<BigInt> xs;
  std::vector<Rational> ys;
  for (int t = 0; t < points; ++t) {
    r.values.push_back(bouquet_family_kappa(order, volt, t));
    xs.push_back(t);
    ys.push_back(Rational(r.values.back()));
  }
  r.poly = interpolate(xs, ys);
  r.degree = r.poly.degree();
  if (BigInt(r.degree) != r.closed_form)
    fail(Errc::InterpolationMismatch, "interpolated degree " + std::to_string(r.degree) + " differs from " + r.closed_form.str());
  return r;
}

inline int kappa_degree_in_t(const FamilySpec& f, const ExponentVector& a) { return kappa_polynomial_in_t(f, a).degree; }

// 1 - 1/p^{(a+b-s) v 0} over 0 <= a, b <= s (with_zero) or 0 < a, b <= s.
inline RationalMatrix build_matrix(const std::vector<int>& p, const ExponentVector& s, bool with_zero) {
  require_same_length(p, s);
  std::vector<ExponentVector> idx;
  for (const auto& a : exponent_grid(s))
    if (with_zero || !is_zero_vector(a)) idx.push_back(a);
  RationalMatrix m(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      ExponentVector d(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) d[k] = std::max(idx[i][k] + idx[j][k] - s[k], 0);
      m(i, j) = Rational(1) - Rational(BigInt(1), exp_pow(p, d));
    }
  return m;
}

inline RationalMatrix build_matrix_M(const std::vector<int>& p, const ExponentVector& s) { return build_matrix(p, s, false); }
inline RationalMatrix build_matrix_M_bar(const std::vector<int>& p, const ExponentVector& s) { return build_matrix(p, s, true); }

inline Rational det_exact(const RationalMatrix& m) { return determinant(m); }

inline RationalMatrix matrix_J(int s) { return RationalMatrix(static_cast<std::size_t>(s + 1), static_cast<std::size_t>(s + 1), Rational(1)); }

inline RationalMatrix matrix_K(int p, int s) {
  const std::size_t n = static_cast<std::size_t>(s + 1);
  RationalMatrix k(n, n, Rational(1));
  for (int a = 0; a <= s; ++a)
    for (int b = 0; b <= s; ++b)
      if (a + b - s > 0) k(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = Rational(BigInt(1), ipow(BigInt(p), static_cast<std::uint64_t>(a + b - s)));
  return k;
}

inline RationalMatrix matrix_L(int s) {
  RationalMatrix l = RationalMatrix::identity(static_cast<std::size_t>(s + 1), Rational(0), Rational(1));
  for (std::size_t i = 1; i < l.rows(); ++i) l(i, 0) = -1;
  return l;
}

inline RationalMatrix matrix_R(int s) {
  RationalMatrix r = RationalMatrix::identity(static_cast<std::size_t>(s + 1), Rational(0), Rational(1));
  for (std::size_t j = 1; j < r.cols(); ++j) r(0, j) = -1;
  return r;
}

// Expected L K R: 1 at (0,0), zero first row and column elsewhere, and
// K(a,b) - 1 in the lower block (zero whenever a + b <= s).
inline RationalMatrix matrix_K_prime_pattern(int p, int s) {
  RationalMatrix k = matrix_K(p, s);
  RationalMatrix out(k.rows(), k.cols(), Rational(0));
  out(0, 0) = 1;
  for (std::size_t a = 1; a < k.rows(); ++a)
    for (std::size_t b = 1; b < k.cols(); ++b) out(a, b) = k(a, b) - 1;
  return out;
}

inline RationalMatrix kronecker_all(const std::vector<RationalMatrix>& ms) {
  RationalMatrix acc = RationalMatrix::identity(1, Rational(0), Rational(1));
  for (const auto& m : ms) acc = kronecker(acc, m);
  return acc;
}

// det((AB)(m1,m2)) = sum_m det(A(m1,m)) det(B(m,m2)).
inline bool cauchy_binet_check(const RationalMatrix& a, const RationalMatrix& b, std::size_t m1, std::size_t m2) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) fail(Errc::NotSquare, "Cauchy-Binet needs equal square matrices");
  const Rational left = determinant(minor_matrix(a * b, m1, m2));
  Rational right = 0;
  for (std::size_t m = 0; m < a.rows(); ++m) right += determinant(minor_matrix(a, m1, m)) * determinant(minor_matrix(b, m, m2));
  return left == right;
}

// The structural identities behind the determinant: M_bar as a difference of
// Kronecker products, L J R = E_11, L K R in its expected shape.
inline bool decomposition_identities_hold(const std::vector<int>& p, const ExponentVector& s) {
  std::vector<RationalMatrix> js, ks;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const RationalMatrix l = matrix_L(s[i]), r = matrix_R(s[i]);
    RationalMatrix e11(l.rows(), l.cols(), Rational(0));
    e11(0, 0) = 1;
    if (!(l * matrix_J(s[i]) * r == e11)) return false;
    if (!(l * matrix_K(p[i], s[i]) * r == matrix_K_prime_pattern(p[i], s[i]))) return false;
    js.push_back(matrix_J(s[i]));
    ks.push_back(matrix_K(p[i], s[i]));
  }
  return build_matrix_M_bar(p, s) == kronecker_all(js) - kronecker_all(ks);
}

struct LemmaMatrixResult {
  Rational det;
  Rational printed;  // (-1)^{T-1} prod (1/p_i - 1)^{s_i T/(s_i+1)}
  bool nonzero = false;
  bool magnitude_matches = false;
  bool sign_matches_paper = false;
  bool identities_hold = false;
};

inline LemmaMatrixResult lemma_matrix(const std::vector<int>& p, const ExponentVector& s) {
  require_same_length(p, s);
  long long t = 1;
  for (int x : s) t *= x + 1;
  LemmaMatrixResult r;
  r.det = det_exact(build_matrix_M(p, s));
  Rational prod = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    prod *= rpow(Rational(BigInt(1), BigInt(p[i])) - 1, s[i] * t / (s[i] + 1));
  r.printed = ((t - 1) % 2 == 0) ? prod : Rational(-prod);
  r.nonzero = !r.det.is_zero();
  r.magnitude_matches = abs(r.det) == abs(r.printed);
  r.sign_matches_paper = r.det == r.printed;
  r.identities_hold = decomposition_identities_hold(p, s);
  return r;
}

inline std::string vector_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Passes when det(M) != 0 and |det(M)| matches the closed form; the sign is
// reported, never enforced.
inline VerificationReport lemma_matrix_check(const std::vector<int>& p, const ExponentVector& s) {
  Stopwatch sw;
  const LemmaMatrixResult m = lemma_matrix(p, s);
  VerificationReport r;
  r.claim = "det(M) nonzero with closed-form magnitude";
  r.inputs = "p=" + vector_string(p) + " s=" + vector_string(s);
  r.left = to_string(m.det);
  r.right = to_string(m.printed);
  r.details["det"] = to_string(m.det);
  r.details["nonzero"] = m.nonzero;
  r.details["magnitude_matches"] = m.magnitude_matches;
  r.details["sign_matches_paper"] = m.sign_matches_paper;
  r.details["decomposition_identities"] = m.identities_hold;
  if (!m.sign_matches_paper) r.notes.push_back("computed sign differs from the printed closed form");
  r.verdict = verdict_from(m.nonzero && m.magnitude_matches && m.identities_hold);
  r.millis = sw.millis();
  return r;
}

// Rows b, columns a over nonzero grid vectors: p^a (1 - 1/p^{(a+b-s) v 0}),
// the degree in t of kappa(X_a) when the t loops carry p^{s-b}.
inline RationalMatrix degree_matrix(const std::vector<int>& p, const ExponentVector& s) {
  RationalMatrix m = build_matrix_M(p, s);
  std::vector<ExponentVector> idx;
  for (const auto& a : exponent_grid(s))
    if (!is_zero_vector(a)) idx.push_back(a);
  RationalMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) d(i, j) = m(i, j) * Rational(exp_pow(p, idx[j]));
  return d;
}

// A relation q prod kappa(X_i)^{m_i} = 1 over every Z/n cover would force the
// degree vector D m = 0 with D of full rank, hence m_a = 0 for a != 0; the
// remaining m_0 dies because kappa(X) is unbounded (kappa(cycle(r)) = r).
inline VerificationReport nonexistence_certificate(long long n, bool interpolate_degrees = true) {
  Stopwatch sw;
  if (n < 2) fail(Errc::InvalidArgument, "certificate needs n >= 2");
  const auto [p, s] = factor(n);
  const RationalMatrix d = degree_matrix(p, s);
  const std::size_t rk = rank(d);
  VerificationReport r;
  r.claim = "no nontrivial multiplicative relation among intermediate complexities";
  r.inputs = "n=" + std::to_string(n);
  std::vector<ExponentVector> idx;
  for (const auto& a : exponent_grid(s))
    if (!is_zero_vector(a)) idx.push_back(a);
  bool degrees_ok = true;
  if (interpolate_degrees) {
    // each entry is the interpolated degree for voltage exponent s - b
    for (std::size_t i = 0; i < idx.size(); ++i) {
      ExponentVector volt(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) volt[k] = s[k] - idx[i][k];
      const FamilySpec f{p, s, volt};
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const int deg = kappa_degree_in_t(f, idx[j]);
        if (Rational(deg) != d(i, j)) degrees_ok = false;
      }
    }
  }
  bool cycles_unbounded = true;
  for (int k = 3; k <= 10; ++k) cycles_unbounded = cycles_unbounded && spanning_tree_count(cycle_graph(k)) == k;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(to_string(d(i, j)));
    rows.push_back(row);
  }
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const auto& a : idx) labels.push_back(vector_string(a));
  r.details["primes"] = p;
  r.details["s"] = s;
  r.details["index"] = labels;
  r.details["degree_matrix"] = rows;
  r.details["rank"] = std::to_string(rk);
  r.details["size"] = std::to_string(d.rows());
  r.details["det"] = to_string(determinant(d));
  r.details["degrees_interpolated"] = interpolate_degrees;
  r.details["degrees_match"] = degrees_ok;
  r.details["kappa_X_unbounded"] = cycles_unbounded;
  const bool full = rk == d.rows();
  r.details["conclusion"] = full && degrees_ok && cycles_unbounded ? "only the trivial relation m = 0 survives"
                                                                   : "certificate incomplete";
  r.left = std::to_string(rk);
  r.right = std::to_string(d.rows());
  r.verdict = verdict_from(full && degrees_ok && cycles_unbounded);
  r.millis = sw.millis();
  return r;
}

}  // namespace galois_span
