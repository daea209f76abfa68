#pragma once

#include <vector>

#include "tfcover/canonical.hpp"
#include "tfcover/common.hpp"
#include "tfcover/graph.hpp"

namespace tfcover {

// Double cover of a base graph on vertices 0..n-1.  Cover vertex (u, i) for
// i in {0,1} is stored at index u + i*n; V0 = [0, n) and V1 = [n, 2n) are the
// two colour classes.  Every edge joins V0 to V1.
struct Cover {
  int base_n = 0;
  Graph graph;

  int v0(int u) const { return u; }
  int v1(int u) const { return u + base_n; }
  bool in_v0(int x) const { return x < base_n; }
  int base_vertex(int x) const { return x < base_n ? x : x - base_n; }
  int side(int x) const { return x < base_n ? 0 : 1; }

  // 0 for V0 vertices, 1 for V1: the colouring used for class-respecting
  // canonical forms.
  std::vector<int> colour_classes() const {
    std::vector<int> c(2 * base_n, 0);
    for (int x = base_n; x < 2 * base_n; ++x) c[x] = 1;
    return c;
  }
};

// Directed double cover: all arcs run from V0 to V1, so V0 vertices are
// sources and V1 vertices are sinks.
struct AltCover {
  int base_n = 0;
  MixedGraph digraph;

  int v0(int u) const { return u; }
  int v1(int u) const { return u + base_n; }
};

// Canonical double cover: ((u,0),(v,1)) is an edge iff {u,v} is an edge of g.
inline Cover cdc(const Graph& g) {
  int n = g.vertex_count();
  Cover c;
  c.base_n = n;
  c.graph = Graph(2 * n);
  for (auto [u, v] : g.edges()) {
    c.graph.add_edge(u, v + n);
    c.graph.add_edge(v, u + n);
  }
  return c;
}

// Cover of a symmetric arc set, where a loop at u contributes the single
// cover edge {(u,0),(u,1)}.
inline Cover cdc(const MixedGraph& g) {
  check_internal(g.is_symmetric(), "cdc: mixed graph must be symmetric");
  int n = g.vertex_count();
  Cover c;
  c.base_n = n;
  c.graph = Graph(2 * n);
  for (auto [u, v] : g.arcs()) c.graph.add_edge(u, v + n);
  return c;
}

// Alternating double cover: arc ((u,0),(v,1)) iff (u,v) is an arc of g.
inline AltCover adc(const MixedGraph& g) {
  int n = g.vertex_count();
  AltCover c;
  c.base_n = n;
  c.digraph = MixedGraph(2 * n, /*allow_loops=*/false);
  for (auto [u, v] : g.arcs()) c.digraph.add_arc(u, v + n);
  return c;
}

inline AltCover adc(const Graph& g) { return adc(as_mixed(g)); }

// ---------------------------------------------------------------------------
// Instability measurement
// ---------------------------------------------------------------------------

enum class TrivialReason { None, Bipartite, TwinVertices };

inline const char* to_string(TrivialReason r) {
  switch (r) {
    case TrivialReason::Bipartite: return "bipartite";
    case TrivialReason::TwinVertices: return "twin-vertices";
    default: return "none";
  }
}

// Two vertices with identical open neighbourhoods (necessarily non-adjacent).
inline bool has_twin_vertices(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> nbr(n);
  for (auto [u, v] : g.edges()) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  for (auto& row : nbr) std::sort(row.begin(), row.end());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && nbr[u] == nbr[v]) return true;
  return false;
}

struct InstabilityReport {
  Integer aut_cdc_order = 1;
  Integer aut_g_order = 1;
  Integer index = 1;  // aut_cdc_order / (2 * aut_g_order), always integral
  bool unstable = false;
  TrivialReason trivial_reason = TrivialReason::None;
  bool connected_input = true;
};

inline InstabilityReport instability_report(const Graph& g) {
  InstabilityReport r;
  r.connected_input = is_connected(g);
  r.aut_g_order = canonical_form(g).automorphism_order;
  r.aut_cdc_order = canonical_form(cdc(g).graph).automorphism_order;
  Integer denom = 2 * r.aut_g_order;
  check_internal(r.aut_cdc_order % denom == 0,
                 "instability index is not integral");
  r.index = r.aut_cdc_order / denom;
  r.unstable = r.index > 1;
  if (is_bipartite(g) && r.aut_g_order > 1)
    r.trivial_reason = TrivialReason::Bipartite;
  else if (has_twin_vertices(g))
    r.trivial_reason = TrivialReason::TwinVertices;
  return r;
}

}  // namespace tfcover
