#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tfcover/canonical.hpp"
#include "tfcover/common.hpp"
#include "tfcover/cover.hpp"
#include "tfcover/graph.hpp"
#include "tfcover/perm_group.hpp"
#include "tfcover/permutation.hpp"

namespace tfcover {

// A pair of bijections (alpha, beta) mapping one vertex set onto another.
// It is a two-sided (TF-) isomorphism from g to h when
//   (u,v) is an arc of g  <=>  (alpha(u), beta(v)) is an arc of h.
struct TfPair {
  Permutation alpha, beta;

  int source_vertex_count() const { return alpha.degree(); }
  int target_vertex_count() const { return beta.degree(); }
  bool nontrivial() const { return !(alpha == beta); }
  TfPair inverse() const { return {alpha.inverse(), beta.inverse()}; }

  // Componentwise composition, left factor applied first on both sides.
  friend TfPair operator*(const TfPair& a, const TfPair& b) {
    return {a.alpha * b.alpha, a.beta * b.beta};
  }
  friend bool operator==(const TfPair& a, const TfPair& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
};

// The permutation of cover vertices induced by a pair acting on V0 via alpha
// and on V1 via beta (layout: (u,i) at u + i*n).
inline Permutation cover_permutation(const TfPair& p, int n) {
  check_internal(p.alpha.degree() == n && p.beta.degree() == n,
                 "cover_permutation: degree mismatch");
  std::vector<int> img(2 * n);
  for (int u = 0; u < n; ++u) {
    img[u] = p.alpha(u);
    img[u + n] = p.beta(u) + n;
  }
  return Permutation(std::move(img));
}

// Checks the defining arc equivalence in both directions.
inline bool verify_tf(const MixedGraph& g, const MixedGraph& h, const TfPair& p) {
  require(p.alpha.degree() == g.vertex_count() && p.beta.degree() == g.vertex_count(),
          "verify_tf: bijection degree does not match the source graph");
  require(g.vertex_count() == h.vertex_count(),
          "verify_tf: source and target vertex counts differ");
  if (g.arc_count() != h.arc_count()) return false;
  for (auto [u, v] : g.arcs())
    if (!h.has_arc(p.alpha(u), p.beta(v))) return false;
  Permutation ai = p.alpha.inverse(), bi = p.beta.inverse();
  for (auto [x, y] : h.arcs())
    if (!g.has_arc(ai(x), bi(y))) return false;
  return true;
}

inline bool verify_tf(const Graph& g, const Graph& h, const TfPair& p) {
  return verify_tf(as_mixed(g), as_mixed(h), p);
}

// Searches for a TF-isomorphism g -> h by looking for a colour-class
// respecting isomorphism between the double covers, trying the class-swapped
// alignment when the direct one fails.  The two restrictions of that cover
// isomorphism are the returned pair.
inline std::optional<TfPair> find_tf_isomorphism(const Graph& g, const Graph& h) {
  int n = g.vertex_count();
  bool covers_equal = false;
  std::optional<TfPair> out;
  if (n == h.vertex_count()) {
    Cover cg = cdc(g), ch = cdc(h);
    covers_equal = certificate(cg.graph) == certificate(ch.graph);
    std::vector<int> cols = cg.colour_classes();
    std::optional<Permutation> rho = find_isomorphism(cg.graph, cols, ch.graph, cols);
    if (!rho) {
      std::vector<int> swapped(2 * n, 0);
      for (int x = 0; x < n; ++x) swapped[x] = 1;
      std::optional<Permutation> cross =
          find_isomorphism(cg.graph, cols, ch.graph, swapped);
      if (cross) {
        // Compose with the canonical class swap (u,i) -> (u,1-i) of h's
        // cover, which is always one of its automorphisms.
        std::vector<int> sw(2 * n);
        for (int u = 0; u < n; ++u) {
          sw[u] = u + n;
          sw[u + n] = u;
        }
        rho = (*cross) * Permutation(std::move(sw));
      }
    }
    if (rho) {
      std::vector<int> ai(n), bi(n);
      for (int u = 0; u < n; ++u) {
        int x = (*rho)(u);
        int y = (*rho)(u + n);
        check_internal(x < n && y >= n, "cover isomorphism does not respect classes");
        ai[u] = x;
        bi[u] = y - n;
      }
      TfPair p{Permutation(std::move(ai)), Permutation(std::move(bi))};
      check_internal(verify_tf(g, h, p), "derived cover witness fails the arc condition");
      out = p;
    }
  }
  // The cover-certificate criterion and the class-respecting search must
  // agree: a plain cover isomorphism always implies a class-respecting one.
  check_internal(covers_equal == out.has_value(),
                 "cover certificates disagree with class-respecting search");
  return out;
}

// Non-isomorphic graphs with isomorphic double covers.
inline bool are_tf_cousins(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  bool covers_equal = certificate(cdc(g).graph) == certificate(cdc(h).graph);
  if (!covers_equal) return false;
  return certificate(g) != certificate(h);
}

// ---------------------------------------------------------------------------
// Two-sided automorphisms
// ---------------------------------------------------------------------------

struct TfGroup {
  std::vector<TfPair> generators;  // generate the whole group
  Integer order = 1;
  PermGroup cover_action;  // the same group acting on the 2n cover vertices

  TfGroup() : cover_action(0) {}
};

// The group of all pairs (alpha, beta) satisfying the arc equivalence with
// g = h: exactly the colour-class-preserving automorphisms of the double
// cover, decomposed by their V0/V1 restrictions.
inline TfGroup tf_automorphism_group(const Graph& g) {
  int n = g.vertex_count();
  Cover c = cdc(g);
  CanonicalResult res = canonical_form(c.graph, c.colour_classes());
  TfGroup tg;
  tg.order = res.automorphism_order;
  tg.cover_action =
      PermGroup::from_generators(2 * n, res.automorphism_generators);
  for (const Permutation& rho : res.automorphism_generators) {
    std::vector<int> ai(n), bi(n);
    for (int u = 0; u < n; ++u) {
      int x = rho(u), y = rho(u + n);
      check_internal(x < n && y >= n, "class-preserving generator leaves a class");
      ai[u] = x;
      bi[u] = y - n;
    }
    TfPair p{Permutation(std::move(ai)), Permutation(std::move(bi))};
    check_internal(verify_tf(g, g, p), "derived pair is not a two-sided automorphism");
    tg.generators.push_back(std::move(p));
  }
  return tg;
}

// First generator with alpha != beta, if any.  The group contains a
// non-diagonal element iff some generator is non-diagonal.
inline std::optional<TfPair> find_nontrivial_tf_automorphism(const Graph& g) {
  TfGroup tg = tf_automorphism_group(g);
  for (const TfPair& p : tg.generators)
    if (p.nontrivial()) return p;
  return std::nullopt;
}

inline bool is_unstable(const Graph& g) {
  return find_nontrivial_tf_automorphism(g).has_value();
}

// ---------------------------------------------------------------------------
// Pins and entangled pairs
// ---------------------------------------------------------------------------

struct EntanglementReport {
  std::vector<int> pins;  // alpha(x) = beta(x), ascending
  std::vector<std::pair<int, int>> entangled_pairs;  // alpha(x)=beta(y), alpha(y)=beta(x)
};

inline EntanglementReport entanglement(const TfPair& p) {
  require(p.alpha.degree() == p.beta.degree(), "entanglement: degree mismatch");
  // sigma = beta^-1 after alpha: pins are its fixed points, entangled pairs
  // its 2-cycles.
  Permutation sigma = p.alpha * p.beta.inverse();
  EntanglementReport r;
  int n = sigma.degree();
  for (int x = 0; x < n; ++x) {
    if (sigma(x) == x) r.pins.push_back(x);
    int y = sigma(x);
    if (y > x && sigma(y) == x) r.entangled_pairs.emplace_back(x, y);
  }
  return r;
}

}  // namespace tfcover
