#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "group.hpp"
#include "report.hpp"

namespace galois_span {

// Voltages on an orientation, stored for every directed edge with
// volt[inverse(e)] = volt[e]^-1.
struct VoltageAssignment {
  SerreGraph base;
  FiniteGroup group;
  Orientation orientation;
  std::vector<int> volt;

  int operator()(int e) const { return volt.at(static_cast<std::size_t>(e)); }
};

// values[i] is the voltage of orientation.edges[i].
inline VoltageAssignment make_voltage(const SerreGraph& base, const FiniteGroup& group, const Orientation& orientation,
                                      const std::vector<int>& values) {
  validate_orientation(base, orientation);
  if (values.size() != orientation.edges.size()) fail(Errc::InvalidVoltage, "one voltage per orientation edge required");
  VoltageAssignment a{base, group, orientation, std::vector<int>(static_cast<std::size_t>(base.edge_count()), -1)};
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int x = values[i];
    if (x < 0 || x >= group.order()) fail(Errc::InvalidVoltage, "voltage is not a group element");
    const int e = orientation.edges[i];
    a.volt[static_cast<std::size_t>(e)] = x;
    a.volt[static_cast<std::size_t>(base.inverse(e))] = group.inv(x);
  }
  return a;
}

// Voltages per geometric edge in the default orientation.
inline VoltageAssignment make_voltage(const SerreGraph& base, const FiniteGroup& group, const std::vector<int>& values) {
  return make_voltage(base, group, default_orientation(base), values);
}

struct Cover {
  VoltageAssignment voltage;
  SerreGraph derived;

  const FiniteGroup& group() const { return voltage.group; }
  const SerreGraph& base() const { return voltage.base; }
  int degree() const { return voltage.group.order(); }
  int vertex_projection(int y) const { return y / degree(); }
  int edge_projection(int f) const { return f / degree(); }
};

// Vertex (v, s) has index v*|G| + s and edge (e, s) index e*|G| + s;
// o(e,s) = (o(e), s), t(e,s) = (t(e), s a(e)), inverse(e,s) = (inverse(e), s a(e)).
inline Cover derived_graph(const VoltageAssignment& a) {
  const FiniteGroup& g = a.group;
  const int n = g.order();
  const SerreGraph& x = a.base;
  std::vector<DirectedEdge> edges;
  edges.reserve(static_cast<std::size_t>(x.edge_count() * n));
  for (int e = 0; e < x.edge_count(); ++e)
    for (int s = 0; s < n; ++s) {
      const int sa = g.mul(s, a(e));
      edges.push_back({x.origin(e) * n + s, x.terminus(e) * n + sa, x.inverse(e) * n + sa});
    }
  std::vector<std::string> labels;
  for (int v = 0; v < x.vertex_count(); ++v)
    for (int s = 0; s < n; ++s) labels.push_back("(" + std::to_string(v) + "," + g.label(s) + ")");
  return Cover{a, SerreGraph(x.vertex_count() * n, std::move(edges), std::move(labels))};
}

// Checks that (vmap, emap) is a graph morphism which is a local bijection on
// outgoing edges at every vertex.
inline bool is_covering_map(const SerreGraph& y, const SerreGraph& x, const std::vector<int>& vmap,
                            const std::vector<int>& emap) {
  if (vmap.size() != static_cast<std::size_t>(y.vertex_count()) || emap.size() != static_cast<std::size_t>(y.edge_count()))
    return false;
  for (int f = 0; f < y.edge_count(); ++f) {
    const int e = emap[static_cast<std::size_t>(f)];
    if (e < 0 || e >= x.edge_count()) return false;
    if (x.origin(e) != vmap[static_cast<std::size_t>(y.origin(f))]) return false;
    if (x.terminus(e) != vmap[static_cast<std::size_t>(y.terminus(f))]) return false;
    if (x.inverse(e) != emap[static_cast<std::size_t>(y.inverse(f))]) return false;
  }
  for (int w = 0; w < y.vertex_count(); ++w) {
    std::vector<int> img;
    for (int f : y.out_edges(w)) img.push_back(emap[static_cast<std::size_t>(f)]);
    std::sort(img.begin(), img.end());
    std::vector<int> want = x.out_edges(vmap[static_cast<std::size_t>(w)]);
    std::sort(want.begin(), want.end());
    if (img != want) return false;
  }
  return true;
}

inline bool projection_is_covering(const Cover& c) {
  std::vector<int> vmap, emap;
  for (int y = 0; y < c.derived.vertex_count(); ++y) vmap.push_back(c.vertex_projection(y));
  for (int f = 0; f < c.derived.edge_count(); ++f) emap.push_back(c.edge_projection(f));
  return is_covering_map(c.derived, c.base(), vmap, emap);
}

// Connected derived graph with a valid projection; the left action
// s.(v, t) = (v, s t) is then transitive on fibers.
inline bool is_galois(const Cover& c) { return is_connected(c.derived) && projection_is_covering(c); }

inline void require_galois(const Cover& c) {
  if (!is_galois(c)) fail(Errc::NotGalois, "derived graph is not a connected Galois cover");
}

struct IntermediateGraph {
  Subgroup subgroup;
  SerreGraph graph;
  std::vector<int> coset_of;        // group element -> coset index
  std::vector<int> from_cover_vertex, from_cover_edge;  // Y -> X_H
  std::vector<int> to_base_vertex, to_base_edge;        // X_H -> X
};

// Quotient of Y by the left action of H. Vertex (v, c) has index v*[G:H] + c
// where c indexes cosets H s ordered by least element.
inline IntermediateGraph intermediate_graph(const Cover& c, const Subgroup& h) {
  require_galois(c);
  const FiniteGroup& g = c.group();
  require_subgroup(g, h);
  const auto cosets = left_cosets(g, h);
  const std::vector<int> cidx = coset_index(g, h);
  const int m = static_cast<int>(cosets.size());
  const SerreGraph& x = c.base();
  std::vector<DirectedEdge> edges;
  for (int e = 0; e < x.edge_count(); ++e)
    for (int k = 0; k < m; ++k) {
      const int rep = cosets[static_cast<std::size_t>(k)].front();
      const int t = cidx[static_cast<std::size_t>(g.mul(rep, c.voltage(e)))];
      edges.push_back({x.origin(e) * m + k, x.terminus(e) * m + t, x.inverse(e) * m + t});
    }
  std::vector<std::string> labels;
  for (int v = 0; v < x.vertex_count(); ++v)
    for (int k = 0; k < m; ++k)
      labels.push_back("(" + std::to_string(v) + ",H" + g.label(cosets[static_cast<std::size_t>(k)].front()) + ")");
  IntermediateGraph ig{h, SerreGraph(x.vertex_count() * m, std::move(edges), std::move(labels)), cidx, {}, {}, {}, {}};
  const int n = g.order();
  for (int y = 0; y < c.derived.vertex_count(); ++y)
    ig.from_cover_vertex.push_back((y / n) * m + cidx[static_cast<std::size_t>(y % n)]);
  for (int f = 0; f < c.derived.edge_count(); ++f)
    ig.from_cover_edge.push_back((f / n) * m + cidx[static_cast<std::size_t>(f % n)]);
  for (int w = 0; w < ig.graph.vertex_count(); ++w) ig.to_base_vertex.push_back(w / m);
  for (int f = 0; f < ig.graph.edge_count(); ++f) ig.to_base_edge.push_back(f / m);
  return ig;
}

inline BigInt intermediate_kappa(const Cover& c, const Subgroup& h) {
  return spanning_tree_count(intermediate_graph(c, h).graph);
}

// Canonical map X_H -> X_K for H <= K.
inline std::pair<std::vector<int>, std::vector<int>> tower_map(const IntermediateGraph& lo, const IntermediateGraph& hi,
                                                                const FiniteGroup& g) {
  if (!lo.subgroup.is_subset_of(hi.subgroup)) fail(Errc::NotASubgroup, "tower map needs nested subgroups");
  const int mlo = index(g, lo.subgroup), mhi = index(g, hi.subgroup);
  // representative of each coset of lo
  std::vector<int> rep(static_cast<std::size_t>(mlo), -1);
  for (int s = 0; s < g.order(); ++s)
    if (rep[static_cast<std::size_t>(lo.coset_of[static_cast<std::size_t>(s)])] < 0)
      rep[static_cast<std::size_t>(lo.coset_of[static_cast<std::size_t>(s)])] = s;
  auto coset_map = [&](int k) { return hi.coset_of[static_cast<std::size_t>(rep[static_cast<std::size_t>(k)])]; };
  std::vector<int> vmap, emap;
  for (int w = 0; w < lo.graph.vertex_count(); ++w) vmap.push_back((w / mlo) * mhi + coset_map(w % mlo));
  for (int f = 0; f < lo.graph.edge_count(); ++f) emap.push_back((f / mlo) * mhi + coset_map(f % mlo));
  return {vmap, emap};
}

// kappa(X_H) = kappa(X_H') for every pair of conjugate subgroups.
inline VerificationReport conjugate_kappa_check(const Cover& c, int max_order = order_limit()) {
  Stopwatch sw;
  require_galois(c);
  const FiniteGroup& g = c.group();
  const auto subs = all_subgroups(g, max_order);
  std::vector<BigInt> kappa;
  for (const Subgroup& h : subs) kappa.push_back(intermediate_kappa(c, h));
  VerificationReport r;
  r.claim = "conjugate subgroups give equal complexity";
  r.inputs = g.name() + " cover of a " + std::to_string(c.base().vertex_count()) + "-vertex base";
  std::size_t pairs = 0, bad = 0;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (are_conjugate_subgroups(g, subs[i], subs[j])) {
        ++pairs;
        if (kappa[i] != kappa[j]) {
          ++bad;
          r.notes.push_back(subgroup_label(g, subs[i]) + " vs " + subgroup_label(g, subs[j]));
        }
      }
  r.left = std::to_string(pairs - bad);
  r.right = std::to_string(pairs);
  r.details["conjugate_pairs"] = std::to_string(pairs);
  r.verdict = verdict_from(bad == 0);
  r.millis = sw.millis();
  return r;
}

// Uniform voltages on the default orientation, resampled until the derived
// graph is connected. A connected base with Euler characteristic 0 has cyclic
// fundamental group, so a non-cyclic G can never give a connected cover.
inline VoltageAssignment random_connected_voltage(const SerreGraph& base, const FiniteGroup& g, std::uint64_t seed,
                                                  int max_tries = 2000) {
  if (!is_connected(base)) fail(Errc::DisconnectedGraph, "base graph is disconnected");
  if (euler_characteristic(base) == 0 && !is_cyclic(g))
    fail(Errc::NoConnectedAssignmentFound, "no connected " + g.name() + " cover of a graph with Euler characteristic 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  const Orientation s = default_orientation(base);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<int> vals;
    for (std::size_t i = 0; i < s.edges.size(); ++i) vals.push_back(pick(rng));
    VoltageAssignment a = make_voltage(base, g, s, vals);
    if (is_connected(derived_graph(a).derived)) return a;
  }
  fail(Errc::NoConnectedAssignmentFound, "no connected cover after " + std::to_string(max_tries) + " samples");
}

// {"group": spec, "assignments": [{"edge": i, "element": label-or-index}]};
// edge i is geometric edge i, oriented as in default_orientation. Every
// geometric edge must be assigned exactly once.
inline VoltageAssignment voltage_from_json(const SerreGraph& base, const FiniteGroup& g, const nlohmann::json& j) {
  const Orientation s = default_orientation(base);
  std::vector<int> vals(s.edges.size(), -1);
  try {
    for (const auto& item : j.at("assignments")) {
      const int i = item.at("edge").get<int>();
      if (i < 0 || static_cast<std::size_t>(i) >= vals.size()) fail(Errc::InvalidVoltage, "edge index out of range");
      if (vals[static_cast<std::size_t>(i)] >= 0) fail(Errc::InvalidVoltage, "edge assigned twice");
      const auto& el = item.at("element");
      vals[static_cast<std::size_t>(i)] = el.is_number_integer() ? el.get<int>() : g.element(el.get<std::string>());
      if (vals[static_cast<std::size_t>(i)] < 0 || vals[static_cast<std::size_t>(i)] >= g.order())
        fail(Errc::InvalidVoltage, "element index out of range");
    }
  } catch (const nlohmann::json::exception& ex) {
    fail(Errc::ParseError, std::string("voltage JSON: ") + ex.what());
  }
  for (int v : vals)
    if (v < 0) fail(Errc::InvalidVoltage, "every edge needs a voltage");
  return make_voltage(base, g, s, vals);
}

inline nlohmann::ordered_json voltage_to_json(const VoltageAssignment& a, const std::string& group_spec) {
  nlohmann::ordered_json j;
  j["group"] = group_spec;
  j["assignments"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.orientation.edges.size(); ++i)
    j["assignments"].push_back({{"edge", i}, {"element", a.group.label(a(a.orientation.edges[i]))}});
  return j;
}

inline nlohmann::ordered_json cover_to_json(const Cover& c) {
  nlohmann::ordered_json j;
  j["group"] = c.group().name();
  j["degree"] = std::to_string(c.degree());
  j["vertices"] = c.derived.vertex_labels();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : undirected_edges(c.derived)) edges.push_back({c.derived.vertex_label(u), c.derived.vertex_label(v)});
  j["edges"] = edges;
  j["connected"] = is_connected(c.derived);
  return j;
}

}  // namespace galois_span
