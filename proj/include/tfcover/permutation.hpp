#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tfcover/common.hpp"
#include "tfcover/graph.hpp"

namespace tfcover {

// Permutation of {0, ..., n-1} stored as an image table.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
      require(x >= 0 && x < static_cast<int>(img_.size()) && !seen[x],
              "Permutation: image table is not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
  }

  // Composition acting left-to-right on points: (a * b)(x) = b(a(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    check_internal(a.degree() == b.degree(), "Permutation: degree mismatch");
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = b(a(i));
    return Permutation(std::move(img));
  }

  bool is_involution() const {
    for (int i = 0; i < degree(); ++i) {
      if (img_[img_[i]] != i) return false;
    }
    return !is_identity();
  }

  // Cycles of length >= 2 (fixed points omitted), each starting at its
  // minimum element, cycles ordered by that minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int s = 0; s < degree(); ++s) {
      if (seen[s] || img_[s] == s) continue;
      std::vector<int> cyc;
      int x = s;
      while (!seen[x]) {
        seen[x] = 1;
        cyc.push_back(x);
        x = img_[x];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  // Cycle notation, e.g. "(0 3)(2 5)"; "()" for the identity.
  // `base` shifts printed labels (1 prints 1-based points).
  std::string cycle_string(int base = 0) const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
      os << '(';
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ' ';
        os << c[i] + base;
      }
      os << ')';
    }
    return os.str();
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

 private:
  std::vector<int> img_;
};

inline Graph relabel(const Graph& g, const Permutation& p) {
  check_internal(p.degree() == g.vertex_count(), "relabel: degree mismatch");
  Graph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(p(u), p(v));
  return h;
}

inline MixedGraph relabel(const MixedGraph& g, const Permutation& p) {
  check_internal(p.degree() == g.vertex_count(), "relabel: degree mismatch");
  MixedGraph h(g.vertex_count(), g.loops_allowed());
  for (auto [u, v] : g.arcs()) h.add_arc(p(u), p(v));
  return h;
}

// True when p maps g onto h edge-for-edge.
inline bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& p) {
  if (g.vertex_count() != h.vertex_count() || p.degree() != g.vertex_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(p(u), p(v))) return false;
  return true;
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  return is_isomorphism(g, g, p);
}

}  // namespace tfcover
