// Runs the twelve acceptance criteria and prints one line per criterion.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include "oracles.hpp"

using namespace galois_span;

namespace {

struct Outcome {
  bool pass = false;
  std::vector<std::string> notes;
};

struct Criterion {
  int id;
  std::string description;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string data(const std::string& file) { return std::string(GALOIS_SPAN_DATA_DIR) + "/" + file; }

Cover fixture_cover(const std::string& file) {
  std::ifstream in(data(file));
  const auto j = nlohmann::json::parse(in);
  const FiniteGroup g = parse_group_spec(j.at("group").get<std::string>());
  std::ifstream bin(data("bouquet2.json"));
  return derived_graph(voltage_from_json(graph_from_json(nlohmann::json::parse(bin)), g, j));
}

int jobs() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

const std::vector<std::string> kCorpus{"C2xC2", "C2xC4", "C2xC6", "C3xC3", "S3", "D4", "Q8", "A4", "Dic3"};

Outcome c2xc6_example() {
  Outcome o;
  const Cover c = fixture_cover("c2xc6_voltage.json");
  const auto terms = kuroda_terms(c, character_table(c.group()));
  std::multiset<std::string> kappas;
  BigInt k4 = 0;
  std::vector<BigInt> k123;
  for (const auto& t : terms) {
    kappas.insert(t.kappa.str());
    if (t.exponent == Rational(-2)) k4 = t.kappa;
    else if (t.exponent == Rational(1)) k123.push_back(t.kappa);
  }
  const BigInt ky = spanning_tree_count(c.derived);
  const bool values = kappas == std::multiset<std::string>{"6", "300", "294", "3"} && ky == 117600;
  bool reduced = false;
  if (k123.size() == 3 && k4 != 0) {
    const BigInt num = BigInt(2) * k123[0] * k123[1] * k123[2];
    reduced = num % (k4 * k4) == 0 && num / (k4 * k4) == 117600;
  }
  const auto r = verify_kuroda(c);
  o.notes.push_back("kernel intermediates kappa = {6, 300, 294} with exponent 1, kappa = 3 with exponent -2; kappa(Y) = " +
                    ky.str());
  o.notes.push_back("2 k1 k2 k3 / k4^2 = 117600: " + std::string(reduced ? "yes" : "no") + "; verify_kuroda " +
                    verdict_name(r.verdict));
  o.pass = values && reduced && r.verdict == Verdict::Pass;
  return o;
}

Outcome symmetric_three() {
  Outcome o;
  const Cover c = fixture_cover("s3_voltage.json");
  const FiniteGroup& g = c.group();
  // X_2 over {1, (1 2)} and X_5 over {1, (1 2 3), (1 3 2)}
  const BigInt k2 = intermediate_kappa(c, generated_subgroup(g, {g.element("(1 2)")}));
  const BigInt k5 = intermediate_kappa(c, generated_subgroup(g, {g.element("(1 2 3)")}));
  const BigInt kx = spanning_tree_count(c.base());
  const BigInt ky = spanning_tree_count(c.derived);
  const auto bk = verify_brauer_kuroda(c);
  const bool printed_values = k2 == 2 && k5 == 7 && kx == 1 && ky == 294;
  const Rational printed_form = Rational(3 * k2 * k5 * k5) / Rational(kx * kx);
  const Rational derived_form = Rational(3 * k2 * k2 * k5) / Rational(kx * kx);
  o.notes.push_back("computed kappa(X_2) = " + k2.str() + ", kappa(X_5) = " + k5.str() + ", kappa(X) = " + kx.str() +
                    ", kappa(Y) = " + ky.str() + "; expected kappa(X_2) = 2, kappa(X_5) = 7");
  o.notes.push_back("3 k2 k5^2 / k^2 with computed values = " + to_string(printed_form) +
                    "; 3 k2^2 k5 / k^2 (solved from the cyclic-subgroup formula) = " + to_string(derived_form));
  o.notes.push_back("verify_brauer_kuroda " + std::string(verdict_name(bk.verdict)) +
                    "; the expected values and the 3 k2 k5^2 form are each transposed, and only the combination reaches 294");
  o.pass = printed_values && printed_form == Rational(294) && bk.verdict == Verdict::Pass;
  return o;
}

Outcome quaternion() {
  Outcome o;
  const FiniteGroup g = parse_group_spec("Q8");
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cover c = derived_graph(random_connected_voltage(bouquet_graph(2 + static_cast<int>(seed % 3)), g, seed));
    const auto bk = verify_brauer_kuroda(c);
    if (q8_relation_check(c).passed() && bk.passed() && bk.details["kappa_Y_present"] == false) ++ok;
  }
  o.notes.push_back(std::to_string(ok) + "/20 covers satisfy the relation with kappa(Y) absent");
  o.pass = ok == 20;
  return o;
}

SuiteSummary corpus_suite() {
  static const SuiteSummary s = random_suite(20240601, 50, kCorpus, {bouquet_graph(2), bouquet_graph(3)}, jobs());
  return s;
}

Outcome suite_column(std::size_t column) {
  Outcome o;
  const SuiteSummary s = corpus_suite();
  int ok = 0;
  for (const auto& e : s.entries) {
    if (!e.error.empty()) {
      o.notes.push_back(e.group + ": " + e.error);
      continue;
    }
    if (e.reports.at(column).passed()) ++ok;
    else o.notes.push_back(e.group + " seed " + std::to_string(e.seed) + " failed");
  }
  o.notes.push_back(std::to_string(ok) + "/" + std::to_string(s.entries.size()) + " covers pass");
  o.pass = ok == static_cast<int>(s.entries.size());
  return o;
}

Outcome hmsv() {
  Outcome o;
  int ok = 0, total = 0;
  for (int m = 2; m <= 3; ++m) {
    const FiniteGroup g = parse_group_spec("C2^" + std::to_string(m));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      ++total;
      const Cover c = derived_graph(random_connected_voltage(bouquet_graph(m + static_cast<int>(seed % 2)), g, 500 + seed));
      const auto r = verify_hmsv(c);
      if (r.verdict == Verdict::Pass && r.details["routes_agree"] == true) ++ok;
    }
  }
  o.notes.push_back(std::to_string(ok) + "/" + std::to_string(total) + " covers pass with agreeing kernel and cyclic routes");
  o.pass = ok == total;
  return o;
}

Outcome table_one() {
  Outcome o;
  const auto rows = load_table1(data("table1.json"));
  const auto r = table1_check(rows);
  o.notes.push_back(r.left + "/" + r.right + " rows match");
  for (const auto& n : r.notes) o.notes.push_back(n);
  o.pass = r.passed();
  return o;
}

Outcome mobius_identities() {
  Outcome o;
  const auto rows = load_table1(data("table1.json"));
  int ok = 0;
  for (const auto& e : rows) {
    if (verify_eq3(character_table(parse_group_spec(e.spec))).passed()) ++ok;
    else o.notes.push_back("fails for " + e.name);
  }
  o.notes.push_back(std::to_string(ok) + "/" + std::to_string(rows.size()) + " groups of order <= 24");
  o.pass = ok == static_cast<int>(rows.size());
  return o;
}

Outcome degrees() {
  Outcome o;
  struct Case {
    std::vector<int> p;
    ExponentVector s, b;
  };
  const std::vector<Case> cases{{{2}, {2}, {1}}, {{2}, {3}, {2}}, {{3}, {2}, {1}}, {{2, 3}, {1, 1}, {0, 1}}};
  int ok = 0, total = 0;
  for (const auto& c : cases)
    for (const auto& a : exponent_grid(c.s)) {
      ++total;
      try {
        const auto r = kappa_polynomial_in_t(FamilySpec{c.p, c.s, c.b}, a);
        if (BigInt(r.degree) == r.closed_form) ++ok;
      } catch (const Error& ex) {
        o.notes.push_back(ex.what());
      }
    }
  bool square = true;
  for (int t = 0; t <= 5; ++t) square = square && family_kappa(FamilySpec{{2}, {2}, {1}}, t) == BigInt((2 + 4 * t) * (2 + 4 * t));
  o.notes.push_back(std::to_string(ok) + "/" + std::to_string(total) + " degrees match; (2+4t)^2 for t <= 5: " +
                    (square ? "yes" : "no"));
  o.pass = ok == total && square;
  return o;
}

Outcome determinants() {
  Outcome o;
  const std::vector<std::pair<std::vector<int>, ExponentVector>> cases{
      {{2}, {1}}, {{2}, {2}}, {{3}, {1}}, {{2, 3}, {1, 1}}, {{2}, {3}}};
  bool all = true;
  for (const auto& [p, s] : cases) {
    const auto r = lemma_matrix_check(p, s);
    all = all && r.passed();
    o.notes.push_back("p=" + vector_string(p) + " s=" + vector_string(s) + ": det " + r.left + ", closed form " + r.right +
                      (r.details["sign_matches_paper"] == true ? "" : " (sign differs, recorded)"));
  }
  o.pass = all;
  return o;
}

Outcome certificates() {
  Outcome o;
  bool all = true;
  for (long long n : {2, 3, 4, 6, 12, 30}) {
    const auto r = nonexistence_certificate(n);
    all = all && r.passed();
    o.notes.push_back("n=" + std::to_string(n) + ": rank " + r.left + "/" + r.right + ", " +
                      r.details["conclusion"].get<std::string>());
  }
  o.pass = all;
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(12);
  int a = 0;
  for (int i = 0; i < 200; ++i) {
    auto [n, edges] = oracle::random_connected(rng, 7, 9);
    const SerreGraph g = build_graph(n, std::span<const std::pair<int, int>>(edges));
    if (spanning_tree_count(g) == BigInt(oracle::spanning_trees_by_subsets(n, edges))) ++a;
  }
  int b = 0;
  for (int i = 0; i < 100; ++i) {
    auto [n, edges] = oracle::random_connected(rng, 6, 9);
    if (hashimoto_check(build_graph(n, std::span<const std::pair<int, int>>(edges))).passed()) ++b;
  }
  int c = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 7);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back("x" + std::to_string(k));
    const Poset p(labels, oracle::random_order(rng, n));
    std::vector<Rational> f;
    for (std::size_t k = 0; k < n; ++k) f.emplace_back(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 5));
    if (mobius_inversion_check(p, f)) ++c;
  }
  const std::vector<std::string> abelian{"C2", "C3", "C4", "C5", "C6", "C2^2", "C7", "C8", "C2xC4", "C9",
                                         "C10", "C2^3", "C12", "C2xC6", "C3", "C4", "C2^2", "C6", "C5", "C2xC4"};
  int d = 0, e = 0;
  for (std::size_t i = 0; i < abelian.size(); ++i) {
    const SerreGraph base = i % 3 == 0 ? build_graph(2, {{0, 1}, {0, 1}, {0, 1}}) : bouquet_graph(2 + static_cast<int>(i % 2));
    const Cover cov = derived_graph(random_connected_voltage(base, parse_group_spec(abelian[i]), 100 + i));
    if (verify_factorization(cov).passed()) ++d;
    bool inter = verify_prop_formula(cov).passed();
    for (const Subgroup& h : all_subgroups(cov.group())) inter = inter && verify_inter_rel(cov, h).passed();
    if (inter) ++e;
  }
  int f = 0, ftotal = 0;
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k) {
      ++ftotal;
      const Cover cov = derived_graph(random_connected_voltage(cycle_graph(n), cyclic_group(k), static_cast<std::uint64_t>(n * 10 + k)));
      if (verify_euler_zero(cov).passed()) ++f;
    }
  o.notes.push_back("(a) Matrix-Tree vs enumeration " + std::to_string(a) + "/200");
  o.notes.push_back("(b) Hashimoto " + std::to_string(b) + "/100");
  o.notes.push_back("(c) Mobius inversion " + std::to_string(c) + "/100");
  o.notes.push_back("(d) abelian factorization " + std::to_string(d) + "/20");
  o.notes.push_back("(e) abelian product and intermediate formulas " + std::to_string(e) + "/20");
  o.notes.push_back("(f) Euler characteristic 0 covers " + std::to_string(f) + "/" + std::to_string(ftotal));
  o.pass = a == 200 && b == 100 && c == 100 && d == 20 && e == 20 && f == ftotal;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "C2xC6 example: intermediate complexities and kernel formula", 5, c2xc6_example},
      {2, "S3 example: printed values and cyclic-subgroup formula", 5, symmetric_three},
      {3, "Q8 relation on 20 random covers", 60, quaternion},
      {4, "kernel formula on 50 random covers", 300, [] { return suite_column(0); }},
      {5, "cyclic-subgroup formula on 50 random covers", 300, [] { return suite_column(1); }},
      {6, "elementary abelian 2-groups, m = 2, 3", 120, hmsv},
      {7, "group flags for orders <= 24", 120, table_one},
      {8, "cyclic Mobius identities for groups of order <= 24", 120, mobius_identities},
      {9, "degree of kappa in t", 180, degrees},
      {10, "determinant of M", 30, determinants},
      {11, "non-existence certificates", 60, certificates},
      {12, "property suites", 300, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    if (!in_time) o.notes.push_back("over the time budget of " + std::to_string(c.budget_seconds) + " s");
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.description.c_str(), secs);
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
