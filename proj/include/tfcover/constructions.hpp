#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "tfcover/common.hpp"
#include "tfcover/graph.hpp"
#include "tfcover/permutation.hpp"
#include "tfcover/tfiso.hpp"

namespace tfcover {

// ---------------------------------------------------------------------------
// Seed pairs and their extensions
// ---------------------------------------------------------------------------

// A pair of graphs joined by a two-sided isomorphism, grown step by step.
// The left graph stays simple; the right graph may acquire loops, because the
// image of an edge between entangled vertices is a pair of self-paired arcs
// (loops) at the two target vertices of the entanglement.  Every extension
// re-checks the isomorphism, so a state is valid by construction.
struct SeedState {
  Graph g;
  MixedGraph h{0, true};
  TfPair pair;

  // Simple view of the right graph; only available while no entangled edges
  // have been added (those introduce loops).
  Graph h_graph() const {
    require(!h.has_loops(),
            "right graph carries loops (entangled edges were added); no simple view");
    return h.simple_graph();
  }
};

namespace construction_detail {

inline bool entangled_under(const TfPair& p, int x, int y) {
  return x != y && p.alpha(x) == p.beta(y) && p.alpha(y) == p.beta(x);
}

inline void check_state(const SeedState& s) {
  check_internal(s.g.vertex_count() == s.h.vertex_count(),
                 "seed state: vertex counts diverged");
  check_internal(verify_tf(as_mixed(s.g), s.h, s.pair),
                 "seed state: two-sided isomorphism no longer verifies");
}

}  // namespace construction_detail

// The starting pair: two disjoint k-circuits against one 2k-circuit, joined
// by the antipodal two-sided isomorphism.  Left vertices 0..k-1 and k..2k-1
// are the two circuits; left vertex i is entangled with i+k.  Right vertices
// 0..2k-1 form the single circuit; the images of i are the antipodal pair
// { (k+1)i mod 2k, (k+1)i + k mod 2k }.
inline SeedState seed_pair(int k) {
  require(k >= 3 && k % 2 == 1, "seed_pair: k must be an odd integer >= 3");
  int n = 2 * k;
  SeedState s;
  s.g = Graph(n);
  for (int i = 0; i < k; ++i) {
    s.g.add_edge(i, (i + 1) % k);
    s.g.add_edge(k + i, k + (i + 1) % k);
  }
  s.h = MixedGraph(n, /*allow_loops=*/true);
  for (int j = 0; j < n; ++j) s.h.add_edge(j, (j + 1) % n);
  std::vector<int> a(n), b(n);
  for (int i = 0; i < k; ++i) {
    a[i] = (k + 1) * i % n;
    b[i] = ((k + 1) * i + k) % n;
    a[k + i] = b[i];
    b[k + i] = a[i];
  }
  s.pair = TfPair{Permutation(std::move(a)), Permutation(std::move(b))};
  construction_detail::check_state(s);
  return s;
}

// Adds the edge {x, y} between an entangled pair to the left graph.  Its two
// arc images are self-paired, so the right graph gains the loops at the two
// target vertices of the entanglement and the isomorphism carries over
// unchanged.  (No simple graph can absorb this image: a simple edge between
// the two target vertices would leave the pair without a verifying
// isomorphism at all.)
inline SeedState add_entangled_edge(const SeedState& s, int x, int y) {
  int n = s.g.vertex_count();
  require(x >= 0 && x < n && y >= 0 && y < n, "add_entangled_edge: vertex out of range");
  require(construction_detail::entangled_under(s.pair, x, y),
          "add_entangled_edge: vertices are not an entangled pair");
  require(!s.g.has_edge(x, y), "add_entangled_edge: edge already present");
  SeedState out = s;
  out.g.add_edge(x, y);
  out.h.add_edge(s.pair.alpha(x), s.pair.alpha(x));
  out.h.add_edge(s.pair.alpha(y), s.pair.alpha(y));
  construction_detail::check_state(out);
  return out;
}

// Adds two complementary non-entangled edges to the left graph and their two
// image edges to the right graph.  Complementary means the arc images of one
// edge are exactly the reverses of the other's, so the right graph stays
// symmetric and the isomorphism carries over unchanged.
inline SeedState add_split_image_edges(const SeedState& s, std::pair<int, int> e1,
                                       std::pair<int, int> e2) {
  int n = s.g.vertex_count();
  auto in_range = [&](std::pair<int, int> e) {
    return e.first >= 0 && e.first < n && e.second >= 0 && e.second < n &&
           e.first != e.second;
  };
  require(in_range(e1) && in_range(e2), "add_split_image_edges: bad edge");
  bool same = (e1 == e2) || (e1.first == e2.second && e1.second == e2.first);
  require(!same, "add_split_image_edges: edges must be distinct");

  const Permutation& al = s.pair.alpha;
  const Permutation& be = s.pair.beta;
  auto complementary = [&](int a1, int b1, int a2, int b2) {
    return al(a2) == be(b1) && be(b2) == al(a1) && al(b2) == be(a1) &&
           be(a2) == al(b1);
  };
  bool found = false;
  int a1 = e1.first, b1 = e1.second;
  for (auto [a2, b2] : {e2, std::pair<int, int>{e2.second, e2.first}}) {
    if (complementary(a1, b1, a2, b2) || complementary(b1, a1, a2, b2)) {
      found = true;
      break;
    }
  }
  require(found, "add_split_image_edges: edges are not a complementary pair");
  require(al(a1) != be(b1) && al(b1) != be(a1),
          "add_split_image_edges: edge image degenerates to a loop");
  require(!s.g.has_edge(e1.first, e1.second) && !s.g.has_edge(e2.first, e2.second),
          "add_split_image_edges: edge already present");
  require(!s.h.has_arc(al(a1), be(b1)) && !s.h.has_arc(al(b1), be(a1)),
          "add_split_image_edges: image edge already present");

  SeedState out = s;
  out.g.add_edge(e1.first, e1.second);
  out.g.add_edge(e2.first, e2.second);
  out.h.add_edge(al(a1), be(b1));
  out.h.add_edge(al(b1), be(a1));
  construction_detail::check_state(out);
  return out;
}

// Appends one new vertex to each side, mapped to each other on both
// coordinates (a pin), and joins the left one to each listed entangled pair.
// The images join the right one to the two target vertices of each pair.
inline SeedState add_pin(const SeedState& s,
                         const std::vector<std::pair<int, int>>& attach_to) {
  require(!attach_to.empty(), "add_pin: attachment list is empty");
  int n = s.g.vertex_count();
  for (size_t i = 0; i < attach_to.size(); ++i) {
    auto [a, b] = attach_to[i];
    require(a >= 0 && a < n && b >= 0 && b < n, "add_pin: vertex out of range");
    require(construction_detail::entangled_under(s.pair, a, b),
            "add_pin: attachment is not an entangled pair");
    for (size_t j = 0; j < i; ++j) {
      auto [c, d] = attach_to[j];
      bool dup = (std::minmax(a, b) == std::minmax(c, d));
      require(!dup, "add_pin: duplicate attachment");
    }
  }
  SeedState out;
  out.g = Graph(n + 1);
  for (auto [u, v] : s.g.edges()) out.g.add_edge(u, v);
  out.h = MixedGraph(n + 1, /*allow_loops=*/true);
  for (auto [u, v] : s.h.arcs()) out.h.add_arc(u, v);
  std::vector<int> a(n + 1), b(n + 1);
  for (int v = 0; v < n; ++v) {
    a[v] = s.pair.alpha(v);
    b[v] = s.pair.beta(v);
  }
  a[n] = n;
  b[n] = n;
  out.pair = TfPair{Permutation(std::move(a)), Permutation(std::move(b))};
  for (auto [x, y] : attach_to) {
    out.g.add_edge(x, n);
    out.g.add_edge(y, n);
    out.h.add_edge(n, s.pair.alpha(x));
    out.h.add_edge(n, s.pair.beta(x));
  }
  construction_detail::check_state(out);
  return out;
}

// Loop-aware cousin test for grown states: true when the double covers agree
// (loops lift to rungs between the two layers) while the graphs themselves
// differ.  A graph with loops is never isomorphic to a simple one.
inline bool are_tf_cousins(const Graph& g, const MixedGraph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  if (!h.is_symmetric()) return false;
  if (certificate(cdc(g).graph) != certificate(cdc(h).graph)) return false;
  return h.has_loops() || certificate(g) != certificate(h.simple_graph());
}

// ---------------------------------------------------------------------------
// Odd-circuit substitution
// ---------------------------------------------------------------------------

struct SubstitutionResult {
  Graph g;
  Graph h;
  TfPair pair;
};

// Replaces an entangled pair u, v of common odd degree k by two k-circuits on
// the left and one 2k-circuit on the right, reattaching their former edges
// one per circuit vertex.  The returned pair extends the old one with the
// antipodal pairing on the new circuit vertices and verifies by construction.
//
// Left labels: old vertices keep their order with u, v removed, then the
// circuit replacing u (k vertices), then the circuit replacing v.  Right
// labels: old vertices with alpha(u), alpha(v) removed, then the 2k new
// target vertices in the order matched by the new alpha.
inline SubstitutionResult substitute(const Graph& g, const Graph& h, const TfPair& p,
                                     int u, int v) {
  int n = g.vertex_count();
  require(u >= 0 && u < n && v >= 0 && v < n, "substitute: vertex out of range");
  require(verify_tf(g, h, p), "substitute: pair is not a two-sided isomorphism");
  require(construction_detail::entangled_under(p, u, v),
          "substitute: vertices are not an entangled pair");
  require(!g.has_edge(u, v), "substitute: entangled vertices must be non-adjacent");

  std::vector<int> nu, nv;
  for (auto [x, y] : g.edges()) {
    if (x == u) nu.push_back(y);
    if (y == u) nu.push_back(x);
    if (x == v) nv.push_back(y);
    if (y == v) nv.push_back(x);
  }
  std::sort(nu.begin(), nu.end());
  std::sort(nv.begin(), nv.end());
  int k = static_cast<int>(nu.size());
  require(k == static_cast<int>(nv.size()), "substitute: degree mismatch");
  require(k % 2 == 1 && k >= 3, "substitute: degree must be odd and at least 3");

  int A = p.alpha(u), B = p.alpha(v);  // right vertices being replaced

  // Index maps: old vertex -> new position (skipping the replaced vertices).
  std::vector<int> gmap(n, -1), hmap(n, -1);
  int gi = 0, hi = 0;
  for (int x = 0; x < n; ++x) {
    if (x != u && x != v) gmap[x] = gi++;
    if (x != A && x != B) hmap[x] = hi++;
  }
  int base = n - 2;                       // retained vertices on each side
  auto gnew = [&](int j) { return base + j; };  // j-th circuit vertex, 0..2k-1
  auto tnew = [&](int j) { return base + j; };  // j-th target vertex, 0..2k-1

  Graph g2(base + 2 * k);
  for (auto [x, y] : g.edges())
    if (x != u && x != v && y != u && y != v) g2.add_edge(gmap[x], gmap[y]);
  for (int j = 0; j < k; ++j) {
    g2.add_edge(gnew(j), gnew((j + 1) % k));
    g2.add_edge(gnew(k + j), gnew(k + (j + 1) % k));
    g2.add_edge(gnew(j), gmap[nu[j]]);
    g2.add_edge(gnew(k + j), gmap[nv[j]]);
  }

  Graph h2(base + 2 * k);
  for (auto [x, y] : h.edges())
    if (x != A && x != B && y != A && y != B) h2.add_edge(hmap[x], hmap[y]);
  for (int j = 0; j < k; ++j) {
    // Images of the two circuits' edges interleave into one 2k-circuit.
    h2.add_edge(tnew(j), tnew(k + (j + 1) % k));
    h2.add_edge(tnew((j + 1) % k), tnew(k + j));
    // Images of the reattached edges.
    h2.add_edge(tnew(j), hmap[p.beta(nu[j])]);
    h2.add_edge(tnew(k + j), hmap[p.alpha(nu[j])]);
    h2.add_edge(tnew(k + j), hmap[p.beta(nv[j])]);
    h2.add_edge(tnew(j), hmap[p.alpha(nv[j])]);
  }

  std::vector<int> a(base + 2 * k), b(base + 2 * k);
  for (int x = 0; x < n; ++x) {
    if (x == u || x == v) continue;
    a[gmap[x]] = hmap[p.alpha(x)];
    b[gmap[x]] = hmap[p.beta(x)];
  }
  for (int j = 0; j < 2 * k; ++j) {
    a[gnew(j)] = tnew(j);
    b[gnew(j)] = tnew((j + k) % (2 * k));
  }
  SubstitutionResult out{std::move(g2), std::move(h2),
                         TfPair{Permutation(std::move(a)), Permutation(std::move(b))}};
  check_internal(verify_tf(out.g, out.h, out.pair),
                 "substitute: result does not verify");
  return out;
}

// ---------------------------------------------------------------------------
// Claw graphs
// ---------------------------------------------------------------------------

struct ClawParams {
  int n = 1;  // number of claws
  int k = 3;  // leaves per claw (3 gives cubic graphs)
};

namespace construction_detail {

inline void validate(const ClawParams& p) {
  require(p.n >= 1, "claw parameters: n must be at least 1");
  require(p.k >= 2, "claw parameters: k must be at least 2");
}

// Claws and leaf attachments shared by the claw graph and its companion.
// Circuit vertices are 0..2kn-1; claw i contributes its centre followed by
// its k leaves; leaf (i, j) is joined to circuit vertices i+jn and i+jn+kn.
inline Graph claw_skeleton(const ClawParams& p) {
  int circuit = 2 * p.k * p.n;
  Graph g(circuit + (p.k + 1) * p.n);
  for (int i = 0; i < p.n; ++i) {
    int centre = circuit + i * (p.k + 1);
    for (int j = 0; j < p.k; ++j) {
      int leaf = centre + 1 + j;
      g.add_edge(centre, leaf);
      g.add_edge(leaf, (i + j * p.n) % circuit);
      g.add_edge(leaf, (i + j * p.n + p.k * p.n) % circuit);
    }
  }
  return g;
}

}  // namespace construction_detail

// One circuit of length 2kn with n claws, each leaf joined to an antipodal
// pair of circuit vertices.
inline Graph claw_graph(const ClawParams& p) {
  construction_detail::validate(p);
  Graph g = construction_detail::claw_skeleton(p);
  int circuit = 2 * p.k * p.n;
  for (int m = 0; m < circuit; ++m) g.add_edge(m, (m + 1) % circuit);
  return g;
}

// Same vertices and claw edges, with the single circuit replaced by two
// disjoint circuits of length kn.
inline Graph claw_companion(const ClawParams& p) {
  construction_detail::validate(p);
  Graph g = construction_detail::claw_skeleton(p);
  int half = p.k * p.n;
  for (int m = 0; m < half; ++m) {
    g.add_edge(m, (m + 1) % half);
    g.add_edge(half + m, half + (m + 1) % half);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Named reference graphs
// ---------------------------------------------------------------------------

inline Graph generalized_petersen(int n, int j) {
  require(n >= 3, "generalized_petersen: n must be at least 3");
  require(j >= 1 && 2 * j < n, "generalized_petersen: need 1 <= j < n/2");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + j) % n);
  }
  return g;
}

namespace construction_detail {

struct ParsedName {
  std::string base;
  std::vector<int> args;
};

inline ParsedName parse_graph_name(const std::string& name) {
  ParsedName out;
  size_t open = name.find('(');
  if (open == std::string::npos) {
    out.base = name;
  } else {
    if (name.back() != ')')
      throw parse_error("named_graph: malformed name '" + name + "'");
    out.base = name.substr(0, open);
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    size_t pos = 0;
    while (pos <= inner.size()) {
      size_t comma = inner.find(',', pos);
      std::string tok = inner.substr(pos, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - pos);
      size_t a = tok.find_first_not_of(" \t");
      if (a == std::string::npos)
        throw parse_error("named_graph: empty argument in '" + name + "'");
      size_t b = tok.find_last_not_of(" \t");
      tok = tok.substr(a, b - a + 1);
      bool numeric = std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isdigit(c);
      });
      if (!numeric || tok.size() > 7)
        throw parse_error("named_graph: bad argument '" + tok + "' in '" + name + "'");
      out.args.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  std::transform(out.base.begin(), out.base.end(), out.base.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace construction_detail

// Reference graphs by name: petersen, desargues, cycle(n), path(n),
// complete(n), complete_bipartite(a,b), hypercube(d),
// generalized_petersen(n,j) (alias gp(n,j)).
inline Graph named_graph(const std::string& name) {
  auto parsed = construction_detail::parse_graph_name(name);
  const std::string& base = parsed.base;
  const std::vector<int>& args = parsed.args;
  auto arity = [&](size_t want) {
    require(args.size() == want,
            "named_graph: '" + base + "' takes " + std::to_string(want) +
                " argument(s)");
  };
  if (base == "petersen") {
    arity(0);
    return generalized_petersen(5, 2);
  }
  if (base == "desargues") {
    arity(0);
    return generalized_petersen(10, 3);
  }
  if (base == "cycle") {
    arity(1);
    require(args[0] >= 3, "named_graph: cycle needs n >= 3");
    Graph g(args[0]);
    for (int i = 0; i < args[0]; ++i) g.add_edge(i, (i + 1) % args[0]);
    return g;
  }
  if (base == "path") {
    arity(1);
    require(args[0] >= 1, "named_graph: path needs n >= 1");
    Graph g(args[0]);
    for (int i = 0; i + 1 < args[0]; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (base == "complete") {
    arity(1);
    require(args[0] >= 1, "named_graph: complete needs n >= 1");
    Graph g(args[0]);
    for (int u = 0; u < args[0]; ++u)
      for (int w = u + 1; w < args[0]; ++w) g.add_edge(u, w);
    return g;
  }
  if (base == "complete_bipartite") {
    arity(2);
    require(args[0] >= 1 && args[1] >= 1,
            "named_graph: complete_bipartite needs positive sides");
    Graph g(args[0] + args[1]);
    for (int u = 0; u < args[0]; ++u)
      for (int w = 0; w < args[1]; ++w) g.add_edge(u, args[0] + w);
    return g;
  }
  if (base == "hypercube") {
    arity(1);
    require(args[0] >= 1 && args[0] <= 20, "named_graph: hypercube needs 1 <= d <= 20");
    int d = args[0];
    Graph g(1 << d);
    for (int x = 0; x < (1 << d); ++x)
      for (int bit = 0; bit < d; ++bit)
        if (x < (x ^ (1 << bit))) g.add_edge(x, x ^ (1 << bit));
    return g;
  }
  if (base == "generalized_petersen" || base == "gp") {
    arity(2);
    return generalized_petersen(args[0], args[1]);
  }
  throw parse_error("named_graph: unknown name '" + name + "'");
}

}  // namespace tfcover
