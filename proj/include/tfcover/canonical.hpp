#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "tfcover/common.hpp"
#include "tfcover/graph.hpp"
#include "tfcover/graph6.hpp"
#include "tfcover/perm_group.hpp"
#include "tfcover/permutation.hpp"

namespace tfcover {

// Canonical labelling by individualization-refinement with refinement traces,
// automorphism discovery at repeated leaves, orbit pruning against the group
// found so far, and backjumping to the deepest ancestor shared with the first
// search path.  Vertex colours (when given) constrain every map to preserve
// colour classes.
struct CanonicalResult {
  Permutation labeling;     // original vertex -> canonical position
  Graph canonical_graph;    // relabel(input, labeling)
  std::string certificate;  // printable; equal iff (colour-)isomorphic
  std::vector<Permutation> automorphism_generators;  // generate the full group
  Integer automorphism_order = 1;
};

namespace canon_detail {

inline uint64_t mix(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct BitAdj {
  int n = 0, words = 1;
  std::vector<uint64_t> bits;

  explicit BitAdj(const Graph& g)
      : n(g.vertex_count()), words(std::max(1, (n + 63) / 64)),
        bits(static_cast<size_t>(std::max(1, n)) * words, 0) {
    for (auto [u, v] : g.edges()) {
      set(u, v);
      set(v, u);
    }
  }
  void set(int u, int v) {
    bits[static_cast<size_t>(u) * words + v / 64] |= 1ULL << (v % 64);
  }
  bool get(int u, int v) const {
    return (bits[static_cast<size_t>(u) * words + v / 64] >> (v % 64)) & 1;
  }
  int count_in(int v, const std::vector<uint64_t>& mask) const {
    const uint64_t* row = &bits[static_cast<size_t>(v) * words];
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(row[w] & mask[w]);
    return c;
  }
};

// Ordered partition in label/cell-start form.  lab lists the vertices in
// partition order; cstart[p] is the start position of the cell containing
// position p, so cell starts are stable under splits.
struct Part {
  std::vector<int> lab;
  std::vector<int> cstart;

  int size() const { return static_cast<int>(lab.size()); }
  int cell_end(int a) const {
    int n = size(), b = a + 1;
    while (b < n && cstart[b] == a) ++b;
    return b;
  }
  bool discrete() const {
    for (int p = 0; p < size(); ++p)
      if (cstart[p] != p) return false;
    return true;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Searcher {
 public:
  Searcher(const Graph& g, const std::vector<int>& colours)
      : n_(g.vertex_count()), adj_(g), graph_(g) {
    require(static_cast<int>(colours.size()) == n_,
            "canonical_form: colour vector size mismatch");
    // Initial cells: colour classes ascending by colour value.
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return colours[a] < colours[b]; });
    root_.lab = order;
    root_.cstart.assign(n_, 0);
    uint64_t h = 0;
    int cell_start = 0;
    for (int p = 0; p < n_; ++p) {
      if (p > 0 && colours[order[p]] != colours[order[p - 1]]) {
        h = mix(h, static_cast<uint64_t>(p));
        cell_start = p;
      }
      root_.cstart[p] = cell_start;
    }
    // Record colour intervals of the root partition for the certificate.
    for (int p = 0; p < n_;) {
      int b = root_.cell_end(p);
      colour_blocks_.emplace_back(colours[root_.lab[p]], b - p);
      p = b;
    }
    root_hash_ = h;
  }

  CanonicalResult run() {
    Part pt = root_;
    uint64_t h = root_hash_;
    {
      std::vector<int> seeds;
      for (int p = 0; p < n_;) {
        seeds.push_back(p);
        p = pt.cell_end(p);
      }
      refine(pt, seeds, h);
    }
    cur_trace_.push_back(h);
    search(pt, 0, CmpState::kEqual, true);
    cur_trace_.pop_back();
    check_internal(have_first_, "canonical search produced no leaf");

    CanonicalResult out;
    out.labeling = best_perm_;
    out.canonical_graph = relabel(graph_, best_perm_);
    out.certificate = to_graph6(out.canonical_graph);
    if (coloured_certificate_) {
      std::string tail = "|c";
      for (auto [value, size] : colour_blocks_)
        tail += ":" + std::to_string(value) + "x" + std::to_string(size);
      out.certificate += tail;
    }
    out.automorphism_generators = gens_;
    out.automorphism_order = PermGroup::from_generators(n_, gens_).order();
    return out;
  }

  bool coloured_certificate_ = false;

 private:
  enum class CmpState { kEqual, kBetter, kWorse };

  int n_;
  BitAdj adj_;
  Graph graph_;
  Part root_;
  uint64_t root_hash_ = 0;
  std::vector<std::pair<int, int>> colour_blocks_;  // (colour value, size)

  bool have_first_ = false;
  std::vector<uint64_t> first_trace_;
  std::vector<int> first_path_;
  std::string first_bytes_;
  Permutation first_perm_;

  bool have_best_ = false;
  uint64_t best_epoch_ = 0;  // bumped whenever the best leaf is replaced
  std::vector<uint64_t> best_trace_;
  std::string best_bytes_;
  Permutation best_perm_;

  std::vector<uint64_t> cur_trace_;
  std::vector<int> cur_path_;
  std::vector<Permutation> gens_;

  // Equitable refinement.  Splitters are cell start positions; every subcell
  // produced by a split is re-queued, so the drained state is equitable with
  // respect to every final cell.  All events mixed into the trace hash are
  // positional (starts, sizes, degree counts): label-independent.
  void refine(Part& pt, const std::vector<int>& seed_starts, uint64_t& h) const {
    std::deque<int> work(seed_starts.begin(), seed_starts.end());
    std::vector<char> queued(std::max(1, n_), 0);
    for (int s : work) queued[s] = 1;
    std::vector<uint64_t> mask(adj_.words);
    std::vector<std::pair<int, int>> keyed;  // (count, vertex)

    while (!work.empty()) {
      int s = work.front();
      work.pop_front();
      queued[s] = 0;
      int se = pt.cell_end(s);
      std::fill(mask.begin(), mask.end(), 0);
      for (int p = s; p < se; ++p) {
        int v = pt.lab[p];
        mask[v / 64] |= 1ULL << (v % 64);
      }
      h = mix(h, 0xfeedULL);  // splitter event
      h = mix(h, static_cast<uint64_t>(s));
      h = mix(h, static_cast<uint64_t>(se - s));

      for (int a = 0; a < n_;) {
        int b = pt.cell_end(a);
        if (b - a <= 1) {
          a = b;
          continue;
        }
        keyed.clear();
        bool uniform = true;
        int c0 = adj_.count_in(pt.lab[a], mask);
        keyed.emplace_back(c0, pt.lab[a]);
        for (int p = a + 1; p < b; ++p) {
          int c = adj_.count_in(pt.lab[p], mask);
          uniform = uniform && (c == c0);
          keyed.emplace_back(c, pt.lab[p]);
        }
        if (uniform) {
          a = b;
          continue;
        }
        // Split by count ascending; within a run the original order is kept.
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        h = mix(h, 0xbeefULL);  // split event
        h = mix(h, static_cast<uint64_t>(a));
        int run_start = a;
        for (int p = a; p < b; ++p) {
          pt.lab[p] = keyed[p - a].second;
          if (p > a && keyed[p - a].first != keyed[p - a - 1].first) run_start = p;
          pt.cstart[p] = run_start;
        }
        for (int p = a; p < b;) {
          int e = p + 1;
          while (e < b && pt.cstart[e] == p) ++e;
          h = mix(h, static_cast<uint64_t>(keyed[p - a].first));
          h = mix(h, static_cast<uint64_t>(e - p));
          if (!queued[p]) {
            queued[p] = 1;
            work.push_back(p);
          }
          p = e;
        }
        a = b;
      }
    }
  }

  int target_cell(const Part& pt) const {
    int best = -1, best_size = 0;
    for (int a = 0; a < n_;) {
      int b = pt.cell_end(a);
      int sz = b - a;
      if (sz > 1 && (best == -1 || sz < best_size)) {
        best = a;
        best_size = sz;
      }
      a = b;
    }
    return best;
  }

  Permutation leaf_perm(const Part& pt) const {
    std::vector<int> img(n_);
    for (int p = 0; p < n_; ++p) img[pt.lab[p]] = p;
    return Permutation(std::move(img));
  }

  std::string leaf_bytes(const Part& pt) const {
    std::string out((static_cast<size_t>(n_) * (n_ - 1) / 2 + 7) / 8, '\0');
    size_t bit = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++bit)
        if (adj_.get(pt.lab[i], pt.lab[j]))
          out[bit / 8] |= static_cast<char>(1 << (7 - bit % 8));
    return out;
  }

  void record_automorphism(const Permutation& leaf, const Permutation& reference) {
    Permutation a = leaf * reference.inverse();
    if (a.is_identity()) return;
    check_internal(is_automorphism(graph_, a),
                   "canonical search derived a non-automorphism");
    for (const auto& g : gens_)
      if (g == a) return;
    gens_.push_back(a);
  }

  // Explores the subtree rooted at the (already refined) partition.  Returns
  // the depth to unwind to: a value < depth aborts ancestors up to it; depth-1
  // simply resumes the parent's sibling loop.
  int search(const Part& pt, int depth, CmpState state, bool eq_first) {
    if (pt.discrete()) {
      Permutation p = leaf_perm(pt);
      std::string bytes = leaf_bytes(pt);
      if (!have_first_) {
        have_first_ = true;
        first_trace_ = cur_trace_;
        first_path_ = cur_path_;
        first_bytes_ = bytes;
        first_perm_ = p;
        have_best_ = true;
        ++best_epoch_;
        best_trace_ = cur_trace_;
        best_bytes_ = bytes;
        best_perm_ = p;
        return depth - 1;
      }
      if (eq_first && bytes == first_bytes_) {
        record_automorphism(p, first_perm_);
        // Backjump to the deepest ancestor shared with the first path: the
        // subtree between here and there is the automorphic image of an
        // already-explored part of the tree.
        int common = 0;
        while (common < static_cast<int>(cur_path_.size()) &&
               common < static_cast<int>(first_path_.size()) &&
               cur_path_[common] == first_path_[common])
          ++common;
        return common;
      }
      if (state == CmpState::kEqual && bytes == best_bytes_) {
        record_automorphism(p, best_perm_);
        return depth - 1;
      }
      if (state == CmpState::kBetter ||
          (state == CmpState::kEqual && bytes < best_bytes_)) {
        ++best_epoch_;
        best_trace_ = cur_trace_;
        best_bytes_ = bytes;
        best_perm_ = p;
      }
      return depth - 1;
    }

    int t = target_cell(pt);
    int te = pt.cell_end(t);
    std::vector<int> tried;
    uint64_t epoch = best_epoch_;
    for (int idx = t; idx < te; ++idx) {
      // If the best leaf was replaced below this node, this frame is an
      // ancestor of the new best, so its comparison state is exactly kEqual.
      if (best_epoch_ != epoch) {
        state = CmpState::kEqual;
        epoch = best_epoch_;
      }
      int v = pt.lab[idx];
      // Orbit pruning: skip children equivalent to an explored sibling under
      // the automorphisms (found so far) that fix this node's prefix.
      {
        UnionFind uf(n_);
        for (const auto& g : gens_) {
          bool fixes = true;
          for (int x : cur_path_)
            if (g(x) != x) {
              fixes = false;
              break;
            }
          if (!fixes) continue;
          for (int x = 0; x < n_; ++x)
            if (g(x) != x) uf.unite(x, g(x));
        }
        bool skip = false;
        for (int u : tried)
          if (uf.find(u) == uf.find(v)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      tried.push_back(v);

      Part child = pt;
      // Individualize v: bring it to the front of the target cell.
      {
        int pos = t;
        while (child.lab[pos] != v) ++pos;
        for (int q = pos; q > t; --q) child.lab[q] = child.lab[q - 1];
        child.lab[t] = v;
        for (int q = t + 1; q < te; ++q) child.cstart[q] = t + 1;
      }
      uint64_t h = mix(cur_trace_.back(), static_cast<uint64_t>(t));
      std::vector<int> seeds{t};
      if (te - t > 1) seeds.push_back(t + 1);
      refine(child, seeds, h);

      CmpState child_state = state;
      if (state == CmpState::kEqual && have_best_) {
        if (depth + 1 < static_cast<int>(best_trace_.size())) {
          uint64_t bh = best_trace_[depth + 1];
          if (h < bh) child_state = CmpState::kBetter;
          else if (h > bh) child_state = CmpState::kWorse;
        } else {
          child_state = CmpState::kWorse;  // deeper than the best leaf's path
        }
      }
      bool child_eq_first =
          eq_first && have_first_
              ? (depth + 1 < static_cast<int>(first_trace_.size()) &&
                 h == first_trace_[depth + 1])
              : eq_first;
      if (child_state == CmpState::kWorse && !child_eq_first) continue;

      cur_path_.push_back(v);
      cur_trace_.push_back(h);
      int jump = search(child, depth + 1, child_state, child_eq_first);
      cur_path_.pop_back();
      cur_trace_.pop_back();
      if (jump < depth) return jump;
    }
    return depth - 1;
  }
};

}  // namespace canon_detail

inline CanonicalResult canonical_form(const Graph& g, const std::vector<int>& colours) {
  canon_detail::Searcher s(g, colours);
  s.coloured_certificate_ = true;
  return s.run();
}

inline CanonicalResult canonical_form(const Graph& g) {
  canon_detail::Searcher s(g, std::vector<int>(g.vertex_count(), 0));
  return s.run();
}

inline std::string certificate(const Graph& g) { return canonical_form(g).certificate; }

inline std::string certificate(const Graph& g, const std::vector<int>& colours) {
  return canonical_form(g, colours).certificate;
}

inline PermGroup automorphism_group(const Graph& g) {
  auto res = canonical_form(g);
  return PermGroup::from_generators(g.vertex_count(), res.automorphism_generators);
}

inline PermGroup automorphism_group(const Graph& g, const std::vector<int>& colours) {
  auto res = canonical_form(g, colours);
  return PermGroup::from_generators(g.vertex_count(), res.automorphism_generators);
}

inline Integer automorphism_order(const Graph& g) {
  return canonical_form(g).automorphism_order;
}

// Explicit isomorphism g -> h, when one exists.
inline std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  auto cg = canonical_form(g);
  auto ch = canonical_form(h);
  if (cg.certificate != ch.certificate) return std::nullopt;
  Permutation p = cg.labeling * ch.labeling.inverse();
  check_internal(is_isomorphism(g, h, p), "canonical forms matched but map fails");
  return p;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

// Colour-preserving variant.
inline std::optional<Permutation> find_isomorphism(const Graph& g, const std::vector<int>& gc,
                                                   const Graph& h, const std::vector<int>& hc) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  auto cg = canonical_form(g, gc);
  auto ch = canonical_form(h, hc);
  if (cg.certificate != ch.certificate) return std::nullopt;
  Permutation p = cg.labeling * ch.labeling.inverse();
  check_internal(is_isomorphism(g, h, p), "coloured canonical forms matched but map fails");
  for (int v = 0; v < g.vertex_count(); ++v)
    check_internal(gc[v] == hc[p(v)], "coloured isomorphism breaks colours");
  return p;
}

// ---------------------------------------------------------------------------
// Loop-carrying symmetric graphs: canonicalize the simple part with the loop
// flags as colours, then append the canonical loop positions.
// ---------------------------------------------------------------------------

inline std::string certificate(const MixedGraph& m) {
  check_internal(m.is_symmetric(), "certificate: mixed graph must be symmetric");
  Graph simple = m.simple_graph();
  std::vector<int> colours(m.vertex_count(), 0);
  for (int v : m.loop_vertices()) colours[v] = 1;
  auto res = canonical_form(simple, colours);
  std::string cert = res.certificate + "|L";
  std::vector<int> pos;
  for (int v : m.loop_vertices()) pos.push_back(res.labeling(v));
  std::sort(pos.begin(), pos.end());
  for (int p : pos) cert += ":" + std::to_string(p);
  return cert;
}

inline std::optional<Permutation> find_isomorphism(const MixedGraph& a, const MixedGraph& b) {
  check_internal(a.is_symmetric() && b.is_symmetric(),
                 "find_isomorphism: mixed graphs must be symmetric");
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return std::nullopt;
  std::vector<int> ca(a.vertex_count(), 0), cb(b.vertex_count(), 0);
  for (int v : a.loop_vertices()) ca[v] = 1;
  for (int v : b.loop_vertices()) cb[v] = 1;
  auto p = find_isomorphism(a.underlying_graph(), ca, b.underlying_graph(), cb);
  if (!p) return std::nullopt;
  check_internal(relabel(a, *p) == b, "looped isomorphism fails arc check");
  return p;
}

inline bool is_isomorphic(const MixedGraph& a, const MixedGraph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace tfcover
