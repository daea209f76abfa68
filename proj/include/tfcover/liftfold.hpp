#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tfcover/canonical.hpp"
#include "tfcover/common.hpp"
#include "tfcover/cover.hpp"
#include "tfcover/graph.hpp"
#include "tfcover/perm_group.hpp"
#include "tfcover/permutation.hpp"
#include "tfcover/tfiso.hpp"

namespace tfcover {

inline constexpr long long kDefaultElementBound = 1'000'000;

// ---------------------------------------------------------------------------
// Lifts
// ---------------------------------------------------------------------------

// The lift of g through a pair (alpha, beta): a digraph on two rows of
// vertices, one arc (u, v+n) per arc (u,v) of g, with row-0 vertex u carrying
// the label alpha(u) and row-1 vertex u+n carrying beta(u).  Forgetting the
// labels leaves exactly the alternating double cover of g.
struct Lift {
  int base_n = 0;
  MixedGraph digraph{0, false};
  std::vector<int> labels;
};

inline Lift lift(const Graph& g, const TfPair& p) {
  int n = g.vertex_count();
  require(p.alpha.degree() == n && p.beta.degree() == n,
          "lift: pair degree does not match the graph");
  Lift l;
  l.base_n = n;
  l.digraph = adc(g).digraph;
  l.labels.resize(2 * n);
  for (int u = 0; u < n; ++u) {
    l.labels[u] = p.alpha(u);
    l.labels[u + n] = p.beta(u);
  }
  return l;
}

// Validating form: the pair must be a two-sided isomorphism onto the given
// target.
inline Lift lift(const Graph& g, const Graph& h, const TfPair& p) {
  require(verify_tf(g, h, p),
          "lift: pair is not a two-sided isomorphism onto the target");
  return lift(g, p);
}

// The target the pair maps onto, read off the labels: arcs
// (alpha(u), beta(v)) for every arc (u,v) of g.  An arbitrary pair of
// bijections always induces one, though possibly with loops or one-way arcs.
inline MixedGraph induced_target(const Graph& g, const TfPair& p) {
  int n = g.vertex_count();
  require(p.alpha.degree() == n && p.beta.degree() == n,
          "induced_target: pair degree does not match the graph");
  MixedGraph h(n, true);
  for (auto [u, v] : g.edges()) {
    h.add_arc(p.alpha(u), p.beta(v));
    h.add_arc(p.alpha(v), p.beta(u));
  }
  return h;
}

inline int lift_component_count(const Lift& l) {
  return static_cast<int>(components(l.digraph.underlying_graph()).size());
}

// ---------------------------------------------------------------------------
// Guides
// ---------------------------------------------------------------------------

// A class-switching involutory automorphism of the cover; strongly switching
// when no vertex is adjacent to its image (which makes the fold loopless).
struct Guide {
  Permutation involution;
  bool strongly_switching = false;
};

namespace liftfold_detail {

inline void validate_guide(const Cover& d, const Permutation& phi) {
  int m = d.graph.vertex_count();
  require(phi.degree() == m, "guide: degree does not match the cover");
  require((phi * phi).is_identity(), "guide: not an involution");
  for (int x = 0; x < m; ++x)
    require(d.in_v0(x) != d.in_v0(phi(x)), "guide: not class-switching");
  require(is_automorphism(d.graph, phi), "guide: not an automorphism of the cover");
}

inline bool strongly_switching(const Cover& d, const Permutation& phi) {
  for (int x = 0; x < d.graph.vertex_count(); ++x)
    if (d.graph.has_edge(x, phi(x))) return false;
  return true;
}

inline bool lex_less(const Guide& a, const Guide& b) {
  return a.involution < b.involution;
}

}  // namespace liftfold_detail

inline Guide make_guide(const Cover& d, const Permutation& phi) {
  liftfold_detail::validate_guide(d, phi);
  return Guide{phi, liftfold_detail::strongly_switching(d, phi)};
}

// The base graph a cover was built over, reconstructed from the row pairing.
inline Graph base_graph_of(const Cover& d) {
  Graph g(d.base_n);
  for (auto [x, y] : d.graph.edges()) {
    int u = d.base_vertex(x), v = d.base_vertex(y);
    require(u != v, "base_graph_of: cover carries a loop edge");
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

// All class-switching involutions of the cover's automorphism group, in
// lexicographic order of their image arrays.
//
// When the full group exceeds element_bound, the two-copy fallback applies:
// for a cover of a connected bipartite base (two components exchanged by the
// row swap), the guides built as (row swap) composed with the diagonal action
// of a side-reversing involution of the base are enumerated from the base's
// automorphism group instead.  That family is exactly what reaches the
// genuinely new folds in this situation: side-preserving elements fold back
// to the base graph itself.
inline std::vector<Guide> enumerate_guides(const Cover& d,
                                           long long element_bound = kDefaultElementBound) {
  int m = d.graph.vertex_count();
  int n = d.base_n;
  CanonicalResult res = canonical_form(d.graph);
  std::vector<Guide> out;
  if (res.automorphism_order <= Integer(element_bound)) {
    PermGroup aut = PermGroup::from_generators(m, res.automorphism_generators);
    aut.for_each_element(Integer(element_bound), [&](const Permutation& p) {
      if (p.is_identity()) return true;
      if (!(p * p).is_identity()) return true;
      for (int x = 0; x < m; ++x)
        if (d.in_v0(x) == d.in_v0(p(x))) return true;
      out.push_back(Guide{p, liftfold_detail::strongly_switching(d, p)});
      return true;
    });
  } else {
    Graph base = base_graph_of(d);
    auto side = bipartition(base);
    if (!is_connected(base) || !side)
      throw capacity_error(
          "cover automorphism group of order " + res.automorphism_order.str() +
          " exceeds the element bound and the two-copy fallback does not apply");
    CanonicalResult bres = canonical_form(base);
    if (bres.automorphism_order > Integer(element_bound))
      throw capacity_error("base automorphism group of order " +
                           bres.automorphism_order.str() +
                           " exceeds the element bound");
    PermGroup baut = PermGroup::from_generators(n, bres.automorphism_generators);
    baut.for_each_element(Integer(element_bound), [&](const Permutation& psi) {
      if (psi.is_identity()) return true;
      if (!(psi * psi).is_identity()) return true;
      for (int u = 0; u < n; ++u)
        if ((*side)[psi(u)] == (*side)[u]) return true;
      std::vector<int> img(2 * n);
      for (int u = 0; u < n; ++u) {
        img[u] = psi(u) + n;
        img[u + n] = psi(u);
      }
      out.push_back(make_guide(d, Permutation(std::move(img))));
      return true;
    });
  }
  std::sort(out.begin(), out.end(), liftfold_detail::lex_less);
  return out;
}

// ---------------------------------------------------------------------------
// Folding
// ---------------------------------------------------------------------------

// Quotient of the cover by the orbits {x, phi(x)}: each orbit is named after
// its row-0 member, so the folded graph reuses the cover's base indexing.
struct FoldResult {
  MixedGraph folded{0, true};   // symmetric; carries loops when not loopless
  std::vector<int> vertex_map;  // cover vertex -> folded vertex
  bool loopless = false;

  Graph graph() const {
    require(loopless, "fold result carries loops; no simple graph view");
    return folded.simple_graph();
  }
};

inline FoldResult fold(const Cover& d, const Guide& phi) {
  liftfold_detail::validate_guide(d, phi.involution);
  int n = d.base_n;
  FoldResult r;
  r.vertex_map.resize(2 * n);
  for (int x = 0; x < 2 * n; ++x)
    r.vertex_map[x] = x < n ? x : phi.involution(x);
  MixedGraph f(n, true);
  for (auto [x, y] : d.graph.edges()) f.add_edge(r.vertex_map[x], r.vertex_map[y]);
  r.loopless = !f.has_loops();
  r.folded = std::move(f);
  check_internal(r.loopless == liftfold_detail::strongly_switching(d, phi.involution),
                 "loopless fold must coincide with strong switching");
  return r;
}

// ---------------------------------------------------------------------------
// Census of base graphs
// ---------------------------------------------------------------------------

struct CensusClass {
  std::string certificate;
  Graph representative;
  Guide witness;
};

struct BaseCensus {
  std::vector<CensusClass> classes;  // loopless classes, sorted by certificate
  long long guide_count = 0;
  long long strongly_switching_count = 0;
  std::vector<std::string> loop_fold_certificates;  // distinct, sorted
};

// Folds every guide of the cover; loopless results are grouped into
// isomorphism classes (with the lexicographically first witnessing guide),
// loop-carrying results are reported by their distinct certificates.
inline BaseCensus base_graph_census(const Cover& d,
                                    long long element_bound = kDefaultElementBound) {
  BaseCensus out;
  std::map<std::string, CensusClass> classes;
  std::set<std::string> looped;
  std::string cover_cert = certificate(d.graph);
  for (const Guide& phi : enumerate_guides(d, element_bound)) {
    ++out.guide_count;
    FoldResult f = fold(d, phi);
    if (f.loopless) {
      ++out.strongly_switching_count;
      Graph rep = f.graph();
      std::string cert = certificate(rep);
      if (!classes.count(cert)) {
        check_internal(certificate(cdc(rep).graph) == cover_cert,
                       "folded base graph does not recover the cover");
        classes.emplace(cert, CensusClass{cert, rep, phi});
      }
    } else {
      looped.insert(certificate(f.folded));
    }
  }
  for (auto& [cert, cls] : classes) out.classes.push_back(std::move(cls));
  out.loop_fold_certificates.assign(looped.begin(), looped.end());
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy of guides
// ---------------------------------------------------------------------------

namespace liftfold_detail {

// The cover with the guide's vertex pairing materialized: one new vertex per
// orbit {x, phi(x)}, joined to both members and separated from the original
// vertices by colour.  Two guides are conjugate in the cover's automorphism
// group exactly when these decorated graphs are isomorphic colour-preservingly
// (class-switching involutions are fixed-point-free, so the pairing
// determines the involution).
inline std::pair<Graph, std::vector<int>> decorate_with_pairing(const Cover& d,
                                                                const Permutation& phi) {
  int m = d.graph.vertex_count();
  Graph g(m + m / 2);
  for (auto [x, y] : d.graph.edges()) g.add_edge(x, y);
  std::vector<int> colours(m + m / 2, 0);
  int next = m;
  for (int x = 0; x < m; ++x) {
    if (phi(x) < x) continue;
    g.add_edge(x, next);
    g.add_edge(phi(x), next);
    colours[next] = 1;
    ++next;
  }
  check_internal(next == m + m / 2, "pairing decoration: orbit count off");
  return {std::move(g), std::move(colours)};
}

}  // namespace liftfold_detail

// True iff some automorphism of the cover conjugates one guide to the other.
// Runs as a backtracking isomorphism search on pairing-decorated covers, so
// no group enumeration takes place and the element bound is never exceeded.
inline bool guides_conjugate(const Cover& d, const Guide& g1, const Guide& g2,
                             long long element_bound = kDefaultElementBound) {
  (void)element_bound;
  liftfold_detail::validate_guide(d, g1.involution);
  liftfold_detail::validate_guide(d, g2.involution);
  auto [a, ca] = liftfold_detail::decorate_with_pairing(d, g1.involution);
  auto [b, cb] = liftfold_detail::decorate_with_pairing(d, g2.involution);
  return certificate(a, ca) == certificate(b, cb);
}

}  // namespace tfcover
