#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galois_span/galois_span.hpp"

namespace gs = galois_span;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  std::string base = "bouquet:2";
  std::string group;
  std::string voltage;
  std::string subgroup;
  std::string rep;
  std::string relation = "artin";
  std::string multiplier = "order";
  std::string kind = "cyclic";
  std::string fixture = GALOIS_SPAN_DATA_DIR "/table1.json";
  std::string out;
  std::string dot;
  std::uint64_t seed = 0;
  int jobs = 1;
  int iters = 25;
  long long n = 0;
  std::vector<int> p, s, b, a;
};

// Exit status of the selected command: 0 pass, 1 verification failure.
struct Outcome {
  ojson json;
  bool ok = true;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) gs::fail(gs::Errc::ParseError, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    gs::fail(gs::Errc::ParseError, path + ": " + ex.what());
  }
}

// bouquet:k, cycle:n, path:n, complete:n or a graph file.
gs::SerreGraph load_base(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    int k = 0;
    try {
      k = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      gs::fail(gs::Errc::ParseError, "bad graph size in '" + spec + "'");
    }
    if (kind == "bouquet") return gs::bouquet_graph(k);
    if (kind == "cycle") return gs::cycle_graph(k);
    if (kind == "path") return gs::path_graph(k);
    if (kind == "complete") return gs::complete_graph(k);
  }
  return gs::graph_from_json(read_json(spec));
}

gs::FiniteGroup load_group(const Options& o) {
  if (!o.group.empty()) return gs::parse_group_spec(o.group);
  if (!o.voltage.empty()) return gs::parse_group_spec(read_json(o.voltage).at("group").get<std::string>());
  gs::fail(gs::Errc::InvalidArgument, "--group or --voltage is required");
}

gs::Cover load_cover(const Options& o) {
  const gs::SerreGraph base = load_base(o.base);
  const gs::FiniteGroup g = load_group(o);
  if (o.voltage.empty()) return gs::derived_graph(gs::random_connected_voltage(base, g, o.seed));
  return gs::derived_graph(gs::voltage_from_json(base, g, read_json(o.voltage)));
}

// Elements separated by ';' generate the subgroup.
gs::Subgroup parse_subgroup(const gs::FiniteGroup& g, const std::string& text) {
  std::vector<int> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const std::string t = gs::detail::trim(item);
    if (!t.empty()) gens.push_back(g.element(t));
  }
  return gs::generated_subgroup(g, std::span<const int>(gens));
}

ojson report(const gs::VerificationReport& r) { return gs::to_json(r); }

Outcome single(const gs::VerificationReport& r) { return {report(r), r.passed()}; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) gs::fail(gs::Errc::InvalidArgument, "cannot write " + path);
  f << text;
}

ojson strings(const std::vector<std::string>& v) { return ojson(v); }

std::vector<std::string> cyclo_poly_strings(const gs::CycloPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(gs::to_string(c));
  return out;
}

gs::SubgroupPoset pick_poset(const Options& o, const gs::FiniteGroup& g) {
  if (o.kind == "cyclic") return gs::cyclic_poset(g);
  if (o.kind == "kernel") return gs::kernel_poset(gs::character_table(g));
  if (o.kind == "subgroups") return gs::subgroup_lattice(g);
  gs::fail(gs::Errc::InvalidArgument, "--kind must be cyclic, kernel or subgroups");
}

ojson subgroup_json(const gs::FiniteGroup& g, const gs::Subgroup& h) {
  return {{"elements", gs::subgroup_label(g, h)}, {"order", std::to_string(h.order())}, {"index", std::to_string(gs::index(g, h))}};
}

gs::RelationCoefficients load_relation(const Options& o, const gs::FiniteGroup& g) {
  if (o.relation == "artin") return gs::artin_relation(gs::character_table(g));
  if (o.relation == "mobius") return gs::mobius_relation(g);
  // {"relation": [{"subgroup": "a;b", "n": k}, ...]}
  gs::RelationCoefficients coeffs;
  for (const auto& item : read_json(o.relation).at("relation")) {
    const auto& n = item.at("n");
    const gs::BigInt k = n.is_string() ? gs::parse_bigint(n.get<std::string>()) : gs::BigInt(n.get<long long>());
    gs::add_coefficient(coeffs, parse_subgroup(g, item.at("subgroup").get<std::string>()), k);
  }
  return coeffs;
}

std::vector<gs::ExponentVector> admissible_a(const gs::ExponentVector& s) {
  std::vector<gs::ExponentVector> out;
  for (const auto& a : gs::exponent_grid(s))
    if (!gs::is_zero_vector(a)) out.push_back(a);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("GALOIS_SPAN_MAX_ORDER")) {
    try {
      gs::order_limit() = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: GALOIS_SPAN_MAX_ORDER must be an integer\n";
      return 2;
    }
  }

  Options o;
  std::function<Outcome()> action;
  CLI::App app{"Spanning tree formulas for Galois covers of graphs", "galois-span"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "write JSON here instead of stdout");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Outcome()> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto with_cover = [&](CLI::App* sub) {
    sub->add_option("--base", o.base, "graph file or bouquet:k / cycle:n / path:n / complete:n");
    sub->add_option("--group", o.group, "GroupSpec");
    sub->add_option("--voltage", o.voltage, "voltage file (random connected voltages when absent)");
    sub->add_option("--seed", o.seed, "seed for random voltages");
    return sub;
  };

  // graph
  CLI::App* graph = app.add_subcommand("graph", "base graph invariants");
  graph->require_subcommand(1);
  leaf(graph, "kappa", "number of spanning trees", [&] {
    const auto g = load_base(o.base);
    return Outcome{{{"vertices", std::to_string(g.vertex_count())},
                    {"euler_characteristic", std::to_string(gs::euler_characteristic(g))},
                    {"kappa", gs::spanning_tree_count(g).str()}}};
  })->add_option("--base", o.base);
  leaf(graph, "zeta", "h_X(u) with zeta_X(u) = (1-u^2)^chi / h_X(u)", [&] {
    const auto g = load_base(o.base);
    const auto rep = gs::hashimoto_check(g);
    return Outcome{{{"euler_characteristic", std::to_string(gs::euler_characteristic(g))},
                    {"h", strings(gs::coefficient_strings(gs::ihara_h_poly(g)))},
                    {"hashimoto", report(rep)}},
                   rep.passed()};
  })->add_option("--base", o.base);
  CLI::App* gdot = leaf(graph, "dot", "DOT rendering", [&] {
    const std::string text = gs::to_dot(load_base(o.base));
    if (!o.dot.empty()) write_text(o.dot, text);
    return Outcome{{{"dot", text}}};
  });
  gdot->add_option("--base", o.base);
  gdot->add_option("--dot", o.dot);

  // group
  CLI::App* group = app.add_subcommand("group", "finite groups");
  group->require_subcommand(1);
  CLI::App* ginfo = leaf(group, "info", "flags and character table", [&] {
    const auto g = gs::parse_group_spec(o.group);
    const auto ct = gs::character_table(g);
    ojson j;
    j["group"] = g.name();
    j["order"] = std::to_string(g.order());
    j["irreducibly_represented"] = gs::is_irreducibly_represented(ct);
    j["exceptional"] = gs::is_exceptional(g);
    j["character_table"] = gs::character_table_json(ct);
    return Outcome{j};
  });
  ginfo->add_option("group,--group", o.group, "GroupSpec")->required();
  leaf(group, "table1", "compare flags with the bundled fixture", [&] {
    return single(gs::table1_check(gs::load_table1(o.fixture)));
  })->add_option("--fixture", o.fixture);
  CLI::App* gsub = leaf(group, "subgroups", "all subgroups", [&] {
    const auto g = gs::parse_group_spec(o.group);
    ojson a = ojson::array();
    for (const auto& h : gs::all_subgroups(g)) a.push_back(subgroup_json(g, h));
    return Outcome{{{"group", g.name()}, {"subgroups", a}}};
  });
  gsub->add_option("group,--group", o.group, "GroupSpec")->required();

  // poset
  CLI::App* poset = app.add_subcommand("poset", "subgroup posets of a group");
  poset->require_subcommand(1);
  for (const std::string verb : {"hasse", "mobius"}) {
    CLI::App* sub = leaf(poset, verb, verb == "hasse" ? "Hasse diagram (DOT)" : "Mobius table", [&, verb] {
      const auto g = gs::parse_group_spec(o.group);
      const auto sp = pick_poset(o, g);
      if (verb == "hasse") {
        const std::string text = gs::hasse_dot(sp.poset);
        if (!o.dot.empty()) write_text(o.dot, text);
        return Outcome{{{"dot", text}}};
      }
      return Outcome{gs::mobius_json(sp.poset, gs::mobius(sp.poset))};
    });
    sub->add_option("group,--group", o.group, "GroupSpec")->required();
    sub->add_option("--kind", o.kind, "cyclic (top adjoined), kernel (bottom adjoined) or subgroups");
    sub->add_option("--dot", o.dot);
  }

  // cover
  CLI::App* cover = app.add_subcommand("cover", "derived graphs and intermediate covers");
  cover->require_subcommand(1);
  with_cover(leaf(cover, "build", "derived graph", [&] {
    const auto c = load_cover(o);
    ojson j = gs::cover_to_json(c);
    j["voltage"] = gs::voltage_to_json(c.voltage, c.group().name());
    return Outcome{j};
  }));
  with_cover(leaf(cover, "kappa", "kappa of base and cover", [&] {
    const auto c = load_cover(o);
    return Outcome{{{"kappa_X", gs::spanning_tree_count(c.base()).str()},
                    {"kappa_Y", gs::spanning_tree_count(c.derived).str()},
                    {"galois", gs::is_galois(c)}}};
  }));
  with_cover(leaf(cover, "intermediates", "kappa of every intermediate graph", [&] {
    const auto c = load_cover(o);
    const auto& g = c.group();
    std::vector<gs::Subgroup> subs =
        o.subgroup.empty() ? gs::all_subgroups(g) : std::vector<gs::Subgroup>{parse_subgroup(g, o.subgroup)};
    ojson a = ojson::array();
    for (const auto& h : subs) {
      ojson x = subgroup_json(g, h);
      x["kappa"] = gs::intermediate_kappa(c, h).str();
      a.push_back(x);
    }
    return Outcome{{{"group", g.name()}, {"intermediates", a}}};
  }))->add_option("--subgroup", o.subgroup, "elements separated by ';' (generators suffice)");
  CLI::App* cdot = with_cover(leaf(cover, "dot", "DOT of the cover or of X_H", [&] {
    const auto c = load_cover(o);
    const std::string text = o.subgroup.empty()
                                 ? gs::to_dot(c.derived, "Y")
                                 : gs::to_dot(gs::intermediate_graph(c, parse_subgroup(c.group(), o.subgroup)).graph, "X_H");
    if (!o.dot.empty()) write_text(o.dot, text);
    return Outcome{{{"dot", text}}};
  }));
  cdot->add_option("--subgroup", o.subgroup);
  cdot->add_option("--dot", o.dot);

  // lfun
  CLI::App* lfun = app.add_subcommand("lfun", "twisted h polynomials");
  lfun->require_subcommand(1);
  with_cover(leaf(lfun, "h", "h(u, rho) for a rep file, or every linear character of an abelian group", [&] {
    const auto c = load_cover(o);
    ojson a = ojson::array();
    std::vector<gs::MatrixRep> reps;
    if (!o.rep.empty()) reps.push_back(gs::rep_from_json(read_json(o.rep), c.group()));
    else reps = gs::abelian_irreducibles(gs::character_table(c.group()));
    for (const auto& rho : reps) a.push_back({{"degree", std::to_string(rho.degree)}, {"h", cyclo_poly_strings(gs::h_poly(c, rho))}});
    return Outcome{{{"group", c.group().name()}, {"h", a}}};
  }))->add_option("--rep", o.rep, "matrix representation file");
  with_cover(leaf(lfun, "verify-prop", "|G| kappa(Y) = kappa(X) prod h(1, chi)", [&] {
    return single(gs::verify_prop_formula(load_cover(o)));
  }));
  with_cover(leaf(lfun, "verify-factor", "prod h(u, chi) = h_Y(u)", [&] {
    return single(gs::verify_factorization(load_cover(o)));
  }));

  // verify
  CLI::App* verify = app.add_subcommand("verify", "spanning tree formulas");
  verify->require_subcommand(1);
  with_cover(leaf(verify, "kuroda", "formula over kernels of irreducible characters", [&] {
    return single(gs::verify_kuroda(load_cover(o)));
  }));
  with_cover(leaf(verify, "brauer-kuroda", "formula over cyclic subgroups", [&] {
    if (o.multiplier != "order" && o.multiplier != "lcm") gs::fail(gs::Errc::InvalidArgument, "--multiplier must be order or lcm");
    return single(gs::verify_brauer_kuroda(
        load_cover(o), o.multiplier == "lcm" ? gs::ClearingMultiplier::IndexLcm : gs::ClearingMultiplier::GroupOrder));
  }))->add_option("--multiplier", o.multiplier, "exponent clearing: order (|G|) or lcm (of indices)");
  with_cover(leaf(verify, "hmsv", "elementary abelian 2-group formula", [&] {
    return single(gs::verify_hmsv(load_cover(o)));
  }));
  with_cover(leaf(verify, "relation", "relation from sum n_H Ind_H 1 = 0", [&] {
    const auto c = load_cover(o);
    return single(gs::verify_custom_relation(c, load_relation(o, c.group())));
  }))->add_option("--relation", o.relation, "artin, mobius or a relation file");
  with_cover(leaf(verify, "euler-zero", "kappa(Y) = |G| kappa(X) on Euler characteristic 0", [&] {
    return single(gs::verify_euler_zero(load_cover(o)));
  }));

  // family
  CLI::App* family = app.add_subcommand("family", "cyclic families");
  family->require_subcommand(1);
  CLI::App* fdeg = leaf(family, "degree", "degree in t of kappa over each quotient", [&] {
    const gs::FamilySpec f{o.p, o.s, o.b};
    f.validate();
    ojson a = ojson::array();
    bool ok = true;
    for (const auto& av : o.a.empty() ? admissible_a(o.s) : std::vector<gs::ExponentVector>{o.a}) {
      const auto d = gs::kappa_polynomial_in_t(f, av);
      std::vector<std::string> values;
      for (const auto& v : d.values) values.push_back(v.str());
      a.push_back({{"a", av}, {"degree", std::to_string(d.degree)}, {"closed_form", d.closed_form.str()}, {"kappa", values}});
      ok = ok && gs::BigInt(d.degree) == d.closed_form;
    }
    return Outcome{{{"p", o.p}, {"s", o.s}, {"b", o.b}, {"degrees", a}}, ok};
  });
  fdeg->add_option("--p", o.p)->required()->delimiter(',');
  fdeg->add_option("--s", o.s)->required()->delimiter(',');
  fdeg->add_option("--b", o.b)->required()->delimiter(',');
  fdeg->add_option("--a", o.a, "one quotient exponent (all nonzero a when absent)")->delimiter(',');
  CLI::App* fdet = leaf(family, "det-m", "determinant of M", [&] {
    const auto r = gs::lemma_matrix_check(o.p, o.s);
    return Outcome{r.details, r.passed()};
  });
  fdet->add_option("--p", o.p)->required()->delimiter(',');
  fdet->add_option("--s", o.s)->required()->delimiter(',');
  leaf(family, "nonexistence", "rank certificate for Z/n", [&] {
    return single(gs::nonexistence_certificate(o.n, o.n <= 12));
  })->add_option("--n", o.n)->required();

  // selftest
  CLI::App* self = leaf(&app, "selftest", "seeded random covers through every verifier", [&] {
    const auto s = gs::random_suite(o.seed, o.iters, {"C2xC2", "C2xC4", "C2xC6", "C3xC3", "S3", "D4", "Q8", "A4", "Dic3"},
                                    {gs::bouquet_graph(2), gs::bouquet_graph(3)}, o.jobs);
    return Outcome{gs::suite_json(s), s.failures() == 0};
  });
  self->add_option("--seed", o.seed);
  self->add_option("--iters", o.iters);
  self->add_option("--jobs", o.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Outcome r = action();
    const std::string text = r.json.dump(2) + "\n";
    if (o.out.empty()) std::cout << text;
    else write_text(o.out, text);
    return r.ok ? 0 : 1;
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
