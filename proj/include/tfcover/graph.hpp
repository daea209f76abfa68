#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "tfcover/common.hpp"

namespace tfcover {

using Edge = std::pair<int, int>;  // stored normalized: first < second
using Arc = std::pair<int, int>;   // ordered (tail, head); (u,u) is a loop

// Simple undirected graph: no loops, no multi-edges.
// Edges are kept sorted and unique, so equal graphs compare equal.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n) {
    require(n >= 0, "Graph: vertex count must be non-negative");
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(int u, int v) {
    require(u >= 0 && u < n_ && v >= 0 && v < n_, "add_edge: vertex out of range");
    require(u != v, "add_edge: loops are not allowed in a simple graph");
    if (u > v) std::swap(u, v);
    Edge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;  // already present
    edges_.insert(it, e);
  }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n_, 0);
    for (auto [u, v] : edges_) {
      ++deg[u];
      ++deg[v];
    }
    return deg;
  }

  int degree(int v) const {
    require(v >= 0 && v < n_, "degree: vertex out of range");
    int d = 0;
    for (auto [u, w] : edges_) d += (u == v) + (w == v);
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Directed graph that may carry loops (when enabled at construction).
// An undirected edge is represented by the two opposite arcs; a loop at u by
// the single arc (u,u).  Used for two-sided structures: covers read as
// digraphs, lifts, and edge-images that can collapse to loops.
class MixedGraph {
 public:
  MixedGraph() = default;

  explicit MixedGraph(int n, bool allow_loops = false)
      : n_(n), allow_loops_(allow_loops) {
    require(n >= 0, "MixedGraph: vertex count must be non-negative");
  }

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  bool loops_allowed() const { return allow_loops_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  void add_arc(int u, int v) {
    require(u >= 0 && u < n_ && v >= 0 && v < n_, "add_arc: vertex out of range");
    if (u == v) require(allow_loops_, "add_arc: loops not enabled for this graph");
    Arc a{u, v};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
    if (it != arcs_.end() && *it == a) return;
    arcs_.insert(it, a);
  }

  // Adds both orientations (or a single loop arc when u == v).
  void add_edge(int u, int v) {
    add_arc(u, v);
    if (u != v) add_arc(v, u);
  }

  bool has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
  }

  bool is_symmetric() const {
    for (auto [u, v] : arcs_)
      if (u != v && !has_arc(v, u)) return false;
    return true;
  }

  std::vector<int> loop_vertices() const {
    std::vector<int> out;
    for (auto [u, v] : arcs_)
      if (u == v) out.push_back(u);
    return out;
  }

  bool has_loops() const {
    for (auto [u, v] : arcs_)
      if (u == v) return true;
    return false;
  }

  // Simple graph on the symmetric non-loop part.  Requires the graph to be
  // symmetric so nothing is silently dropped except loops.
  Graph simple_graph() const {
    check_internal(is_symmetric(), "simple_graph: graph is not symmetric");
    Graph g(n_);
    for (auto [u, v] : arcs_)
      if (u < v) g.add_edge(u, v);
    return g;
  }

  // Underlying simple graph: forget orientations and loops.
  Graph underlying_graph() const {
    Graph g(n_);
    for (auto [u, v] : arcs_)
      if (u != v) g.add_edge(std::min(u, v), std::max(u, v));
    return g;
  }

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.allow_loops_ == b.allow_loops_ && a.arcs_ == b.arcs_;
  }
  friend bool operator!=(const MixedGraph& a, const MixedGraph& b) { return !(a == b); }

 private:
  int n_ = 0;
  bool allow_loops_ = false;
  std::vector<Arc> arcs_;
};

inline MixedGraph as_mixed(const Graph& g, bool allow_loops = false) {
  MixedGraph m(g.vertex_count(), allow_loops);
  for (auto [u, v] : g.edges()) m.add_edge(u, v);
  return m;
}

// ---------------------------------------------------------------------------
// Structural queries
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int w : adj[u])
        if (comp[w] == -1) {
          comp[w] = id;
          q.push(w);
        }
    }
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g).size() == 1;
}

// Proper 2-colouring, if one exists.  Within each connected component the
// lowest-numbered vertex receives colour 0, so the result is canonical.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          q.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Length of a shortest cycle; nullopt if the graph is acyclic.
// BFS from every root; a non-tree edge (u,v) seen from root r witnesses a
// closed walk of length dist[u]+dist[v]+1, and for a root on a minimum cycle
// the bound is attained, so the minimum over all roots is exact.
inline std::optional<int> girth(const Graph& g) {
  int n = g.vertex_count();
  auto adj = g.adjacency();
  int best = -1;
  for (int r = 0; r < n; ++r) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w && parent[w] != u) {
          int len = dist[u] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

// Eccentricity-based diameter; nullopt when disconnected (infinite) and 0 for
// graphs with at most one vertex.
inline std::optional<int> diameter(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return 0;
  auto adj = g.adjacency();
  int best = 0;
  for (int r = 0; r < n; ++r) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[r] = 0;
    q.push(r);
    int reached = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ++reached;
      best = std::max(best, dist[u]);
      for (int w : adj[u])
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

namespace detail {

// DFS extension used by cycle counting/detection.  The current path starts at
// its anchor (path[0]), every later vertex is > anchor, and a cycle is
// recorded when the path reaches the target length and closes back.  The
// orientation with path[1] < path.back() is counted, so each cycle is seen
// exactly once (anchored at its minimum vertex, traversed one way).
inline bool extend_cycle_search(const std::vector<std::vector<int>>& adj,
                                std::vector<int>& path, std::vector<char>& used,
                                int length, long long& count, bool stop_at_first) {
  int last = path.back();
  if (static_cast<int>(path.size()) == length) {
    int anchor = path[0];
    bool closes = std::find(adj[last].begin(), adj[last].end(), anchor) != adj[last].end();
    if (closes && path[1] < path.back()) {
      ++count;
      if (stop_at_first) return true;
    }
    return false;
  }
  for (int w : adj[last]) {
    if (w <= path[0] || used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    if (extend_cycle_search(adj, path, used, length, count, stop_at_first)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

inline long long cycle_search(const Graph& g, int length, bool stop_at_first) {
  if (length < 3 || length > g.vertex_count()) return 0;
  auto adj = g.adjacency();
  long long count = 0;
  int n = g.vertex_count();
  std::vector<char> used(n, 0);
  for (int a = 0; a + length <= n; ++a) {  // a cycle anchored at a needs length-1 larger vertices
    std::vector<int> path{a};
    used.assign(n, 0);
    used[a] = 1;
    if (extend_cycle_search(adj, path, used, length, count, stop_at_first)) break;
  }
  return count;
}

}  // namespace detail

// Number of distinct cycles (as vertex sets with cyclic order) of the given length.
inline long long count_cycles(const Graph& g, int length) {
  return detail::cycle_search(g, length, /*stop_at_first=*/false);
}

inline bool contains_cycle(const Graph& g, int length) {
  return detail::cycle_search(g, length, /*stop_at_first=*/true) > 0;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  int off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

inline Graph complement_graph(const Graph& g) {
  int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

}  // namespace tfcover
