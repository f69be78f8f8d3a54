#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "report.hpp"

namespace galois_span {

struct DirectedEdge {
  int origin = 0;
  int terminus = 0;
  int inverse = 0;

  bool operator==(const DirectedEdge&) const = default;
};

// Finite multigraph in Serre form: directed edges paired by a fixed-point-free
// involution. Loops are edge pairs with origin == terminus.
class SerreGraph {
 public:
  SerreGraph() = default;

  SerreGraph(int vertex_count, std::vector<DirectedEdge> edges, std::vector<std::string> vertex_labels = {})
      : vertex_count_(vertex_count), edges_(std::move(edges)), vertex_labels_(std::move(vertex_labels)) {
    validate();
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int geometric_edge_count() const { return edge_count() / 2; }

  const DirectedEdge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  int origin(int e) const { return edge(e).origin; }
  int terminus(int e) const { return edge(e).terminus; }
  int inverse(int e) const { return edge(e).inverse; }

  bool has_vertex_labels() const { return !vertex_labels_.empty(); }
  std::string vertex_label(int v) const {
    return has_vertex_labels() ? vertex_labels_.at(static_cast<std::size_t>(v)) : std::to_string(v);
  }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

  // Edges leaving v (the set E_{X,v}).
  std::vector<int> out_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
      if (edges_[static_cast<std::size_t>(e)].origin == v) out.push_back(e);
    return out;
  }

  bool operator==(const SerreGraph& o) const {
    return vertex_count_ == o.vertex_count_ && edges_ == o.edges_;
  }

 private:
  void validate() const {
    if (vertex_count_ < 0) fail(Errc::InvalidGraph, "negative vertex count");
    if (edges_.size() % 2 != 0) fail(Errc::InvalidGraph, "odd number of directed edges");
    if (!vertex_labels_.empty() && vertex_labels_.size() != static_cast<std::size_t>(vertex_count_))
      fail(Errc::InvalidGraph, "vertex label count mismatch");
    const int m = edge_count();
    for (int e = 0; e < m; ++e) {
      const DirectedEdge& d = edges_[static_cast<std::size_t>(e)];
      if (d.origin < 0 || d.origin >= vertex_count_ || d.terminus < 0 || d.terminus >= vertex_count_)
        fail(Errc::IndexOutOfRange, "edge endpoint out of range");
      if (d.inverse < 0 || d.inverse >= m) fail(Errc::IndexOutOfRange, "inverse edge out of range");
      if (d.inverse == e) fail(Errc::InvalidGraph, "inverse has a fixed point");
      const DirectedEdge& inv = edges_[static_cast<std::size_t>(d.inverse)];
      if (inv.inverse != e) fail(Errc::InvalidGraph, "inverse is not an involution");
      if (inv.origin != d.terminus || inv.terminus != d.origin)
        fail(Errc::InvalidGraph, "inverse edge endpoints do not match");
    }
  }

  int vertex_count_ = 0;
  std::vector<DirectedEdge> edges_;
  std::vector<std::string> vertex_labels_;
};

// One directed edge chosen from each involution pair.
struct Orientation {
  std::vector<int> edges;
};

// The orientation picking the lower-indexed edge of each pair; for graphs
// made by build_graph this is edge 2i for undirected edge i.
inline Orientation default_orientation(const SerreGraph& g) {
  Orientation s;
  for (int e = 0; e < g.edge_count(); ++e)
    if (e < g.inverse(e)) s.edges.push_back(e);
  return s;
}

inline void validate_orientation(const SerreGraph& g, const Orientation& s) {
  if (s.edges.size() * 2 != static_cast<std::size_t>(g.edge_count()))
    fail(Errc::InvalidArgument, "orientation must contain one edge per pair");
  std::vector<bool> seen(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : s.edges) {
    if (e < 0 || e >= g.edge_count()) fail(Errc::IndexOutOfRange, "orientation edge out of range");
    if (seen[static_cast<std::size_t>(e)] || seen[static_cast<std::size_t>(g.inverse(e))])
      fail(Errc::InvalidArgument, "orientation contains both edges of a pair");
    seen[static_cast<std::size_t>(e)] = true;
  }
}

// Undirected edge i becomes the pair (2i, 2i+1) with 2i running u -> v.
inline SerreGraph build_graph(int vertex_count, std::span<const std::pair<int, int>> undirected,
                              std::vector<std::string> labels = {}) {
  if (vertex_count < 0) fail(Errc::InvalidArgument, "negative vertex count");
  std::vector<DirectedEdge> edges;
  edges.reserve(undirected.size() * 2);
  for (std::size_t i = 0; i < undirected.size(); ++i) {
    auto [u, v] = undirected[i];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      fail(Errc::IndexOutOfRange,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with " + std::to_string(vertex_count) +
               " vertices");
    const int e = static_cast<int>(2 * i);
    edges.push_back({u, v, e + 1});
    edges.push_back({v, u, e});
  }
  return SerreGraph(vertex_count, std::move(edges), std::move(labels));
}

inline SerreGraph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& undirected,
                              std::vector<std::string> labels = {}) {
  return build_graph(vertex_count, std::span<const std::pair<int, int>>(undirected), std::move(labels));
}

inline SerreGraph build_graph(int vertex_count, std::initializer_list<std::pair<int, int>> undirected,
                              std::vector<std::string> labels = {}) {
  std::vector<std::pair<int, int>> v(undirected);
  return build_graph(vertex_count, std::span<const std::pair<int, int>>(v), std::move(labels));
}

inline SerreGraph bouquet_graph(int loops) {
  std::vector<std::pair<int, int>> e(static_cast<std::size_t>(loops), {0, 0});
  return build_graph(1, std::span<const std::pair<int, int>>(e));
}

inline SerreGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, std::span<const std::pair<int, int>>(e));
}

inline SerreGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, std::span<const std::pair<int, int>>(e));
}

inline SerreGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, std::span<const std::pair<int, int>>(e));
}

// Geometric edges as (origin, terminus) of the default orientation.
inline std::vector<std::pair<int, int>> undirected_edges(const SerreGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int e : default_orientation(g).edges) out.emplace_back(g.origin(e), g.terminus(e));
  return out;
}

inline std::int64_t euler_characteristic(const SerreGraph& g) {
  return static_cast<std::int64_t>(g.vertex_count()) - g.edge_count() / 2;
}

inline bool is_connected(const SerreGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const DirectedEdge& d : g.edges()) adj[static_cast<std::size_t>(d.origin)].push_back(d.terminus);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

// A[v][w] counts directed edges v -> w, so a loop adds 2 to A[v][v].
inline IntMatrix adjacency_matrix(const SerreGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix a(n, n, BigInt(0));
  for (const DirectedEdge& d : g.edges()) a(static_cast<std::size_t>(d.origin), static_cast<std::size_t>(d.terminus)) += 1;
  return a;
}

// D[v][v] = |E_{X,v}|, the number of directed edges leaving v.
inline IntMatrix degree_matrix(const SerreGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix d(n, n, BigInt(0));
  for (const DirectedEdge& e : g.edges()) d(static_cast<std::size_t>(e.origin), static_cast<std::size_t>(e.origin)) += 1;
  return d;
}

inline IntMatrix laplacian(const SerreGraph& g) { return degree_matrix(g) - adjacency_matrix(g); }

// Number of spanning trees via the Matrix-Tree theorem (last principal
// cofactor of D - A, Bareiss elimination).
inline BigInt spanning_tree_count(const SerreGraph& g) {
  if (!is_connected(g)) fail(Errc::DisconnectedGraph, "spanning_tree_count needs a connected graph");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n == 1) return 1;
  return determinant(minor_matrix(laplacian(g), n - 1, n - 1));
}

namespace detail {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace detail

// Exhaustive count over (|V|-1)-subsets of geometric edges. Test oracle only.
inline BigInt brute_force_spanning_trees(const SerreGraph& g, int max_edges = 20) {
  const auto edges = undirected_edges(g);
  const int m = static_cast<int>(edges.size());
  if (m > max_edges) fail(Errc::TooLarge, std::to_string(m) + " geometric edges exceed the enumeration guard");
  const int need = g.vertex_count() - 1;
  if (need < 0) return 0;
  BigInt count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
    if (std::popcount(mask) != need) continue;
    detail::UnionFind uf(g.vertex_count());
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (mask & (std::uint32_t(1) << i)) ok = uf.unite(edges[static_cast<std::size_t>(i)].first, edges[static_cast<std::size_t>(i)].second);
    if (ok) ++count;
  }
  return count;
}

// h_X(u) = det(I - A u + (D - I) u^2). Evaluated at u = 0..2|V| with Bareiss
// and interpolated exactly; the degree is at most 2|V|.
inline IntPolynomial ihara_h_poly(const SerreGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const IntMatrix a = adjacency_matrix(g);
  const IntMatrix d = degree_matrix(g);
  std::vector<BigInt> xs;
  std::vector<Rational> ys;
  for (std::size_t k = 0; k <= 2 * n; ++k) {
    const BigInt u = k;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt id = (i == j) ? 1 : 0;
        m(i, j) = id - a(i, j) * u + (d(i, j) - id) * u * u;
      }
    xs.push_back(u);
    ys.emplace_back(determinant(m));
  }
  return to_integer_polynomial(interpolate(xs, ys));
}

// h'_X(1) = -2 chi(X) kappa(X), both sides exact.
inline VerificationReport hashimoto_check(const SerreGraph& g) {
  Stopwatch sw;
  if (!is_connected(g)) fail(Errc::DisconnectedGraph, "hashimoto_check needs a connected graph");
  const IntPolynomial h = ihara_h_poly(g);
  const BigInt lhs = h.derivative()(BigInt(1));
  const BigInt kappa = spanning_tree_count(g);
  const BigInt rhs = BigInt(-2) * euler_characteristic(g) * kappa;
  VerificationReport r;
  r.claim = "hashimoto: h'(1) = -2 chi kappa";
  r.inputs = std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.geometric_edge_count()) + " edges";
  r.left = to_string(lhs);
  r.right = to_string(rhs);
  r.verdict = verdict_from(lhs == rhs);
  r.details["chi"] = euler_characteristic(g);
  r.details["kappa"] = to_string(kappa);
  r.details["h"] = coefficient_strings(h);
  r.millis = sw.millis();
  return r;
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Undirected DOT; every geometric edge (loops and parallel edges included)
// gets its own line.
inline std::string to_dot(const SerreGraph& g, const std::string& name = "X") {
  std::ostringstream os;
  os << "graph " << dot_quote(name) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << dot_quote(g.vertex_label(v)) << ";\n";
  for (int e : default_orientation(g).edges)
    os << "  " << dot_quote(g.vertex_label(g.origin(e))) << " -- " << dot_quote(g.vertex_label(g.terminus(e)))
       << " [label=\"e" << e << "\"];\n";
  os << "}\n";
  return os.str();
}

// {"vertices": n, "edges": [[u,v], ...], "names": [...]} (names optional).
inline SerreGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(Errc::ParseError, "edge must be a [u, v] pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> names;
    if (j.contains("names") && !j["names"].is_null()) names = j["names"].get<std::vector<std::string>>();
    return build_graph(n, std::span<const std::pair<int, int>>(edges), std::move(names));
  } catch (const nlohmann::json::exception& ex) {
    fail(Errc::ParseError, std::string("graph JSON: ") + ex.what());
  }
}

inline nlohmann::ordered_json graph_to_json(const SerreGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_count();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : undirected_edges(g)) edges.push_back({u, v});
  j["edges"] = edges;
  if (g.has_vertex_labels()) j["names"] = g.vertex_labels();
  return j;
}

}  // namespace galois_span
