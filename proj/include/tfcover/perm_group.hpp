#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <vector>

#include "tfcover/common.hpp"
#include "tfcover/permutation.hpp"

namespace tfcover {

using Integer = boost::multiprecision::cpp_int;

// Permutation group with a base and strong generating set (Schreier–Sims).
// Supports exact order, membership, incremental generator insertion, orbit
// queries, and deterministic bounded element enumeration.
//
// Invariant: for every level i, the stored transversal is the orbit of
// base[i] under the subgroup generated by the strong generators fixing
// base[0..i-1] pointwise, and those levels form a complete stabilizer chain.
class PermGroup {
 public:
  explicit PermGroup(int degree) : degree_(degree) {}

  static PermGroup from_generators(int degree, const std::vector<Permutation>& gens) {
    PermGroup g(degree);
    for (const auto& p : gens) g.add_generator(p);
    return g;
  }

  int degree() const { return degree_; }
  bool is_trivial() const { return sgs_.empty(); }

  Integer order() const {
    Integer o = 1;
    for (const auto& lv : levels_) o *= static_cast<int>(lv.transversal.size());
    return o;
  }

  const std::vector<int>& base() const { return base_; }

  // Strong generators (every group element is a product of these).
  const std::vector<Permutation>& generators() const { return sgs_; }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return sift(p, 0).first.is_identity();
  }

  // Inserts p (and the closure it forces).  Returns true if the group grew.
  bool add_generator(const Permutation& p) {
    require(p.degree() == degree_, "add_generator: degree mismatch");
    auto [residue, level] = sift(p, 0);
    if (residue.is_identity()) return false;
    install(level, residue);
    for (int j = level; j >= 0; --j) close_level(j);
    return true;
  }

  // Orbit of a point under the whole group, ascending.
  std::vector<int> orbit(int point) const {
    std::vector<char> in(degree_, 0);
    std::vector<int> out{point};
    in[point] = 1;
    for (size_t i = 0; i < out.size(); ++i)
      for (const auto& g : sgs_) {
        int q = g(out[i]);
        if (!in[q]) {
          in[q] = 1;
          out.push_back(q);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  // All orbits, each ascending, ordered by minimum element.
  std::vector<std::vector<int>> orbits() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < degree_; ++v) {
      if (seen[v]) continue;
      auto orb = orbit(v);
      for (int x : orb) seen[x] = 1;
      out.push_back(std::move(orb));
    }
    return out;
  }

  // Visits every element exactly once in a deterministic order (a fixed
  // traversal of the transversal product decomposition).  Throws
  // capacity_error if the order exceeds `bound`.  The visitor may return
  // false to stop early.
  void for_each_element(const Integer& bound,
                        const std::function<bool(const Permutation&)>& fn) const {
    if (order() > bound)
      throw capacity_error("group order " + order().str() +
                           " exceeds enumeration bound " + bound.str());
    Permutation acc = Permutation::identity(degree_);
    enumerate(static_cast<int>(levels_.size()) - 1, acc, fn);
  }

  // Materialized deterministic element list (ascending by image table).
  std::vector<Permutation> elements(const Integer& bound) const {
    std::vector<Permutation> out;
    for_each_element(bound, [&](const Permutation& p) {
      out.push_back(p);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Level {
    // point -> representative u with u(base_point) = point
    std::map<int, Permutation> transversal;
  };

  int degree_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  std::vector<Permutation> sgs_;

  // Strong generators fixing base_[0..i-1] pointwise: the generating set of
  // the i-th group in the stabilizer chain.
  std::vector<Permutation> level_generators(int i) const {
    std::vector<Permutation> out;
    for (const auto& g : sgs_) {
      bool fixes = true;
      for (int j = 0; j < i && fixes; ++j) fixes = (g(base_[j]) == base_[j]);
      if (fixes) out.push_back(g);
    }
    return out;
  }

  // Strips p through levels [from, end); returns the residue and the level
  // index at which stripping stopped (levels_.size() if fully stripped).
  std::pair<Permutation, int> sift(Permutation p, int from) const {
    for (int i = from; i < static_cast<int>(levels_.size()); ++i) {
      int image = p(base_[i]);
      auto it = levels_[i].transversal.find(image);
      if (it == levels_[i].transversal.end()) return {p, i};
      p = p * it->second.inverse();  // now fixes base_[i]
    }
    return {p, static_cast<int>(levels_.size())};
  }

  // Records r as a strong generator for level `at` (r fixes base_[0..at-1]
  // and moves base_[at]); creates the level first when `at` is past the end.
  void install(int at, const Permutation& r) {
    if (at == static_cast<int>(levels_.size())) {
      int moved = -1;
      for (int x = 0; x < degree_; ++x)
        if (r(x) != x) {
          moved = x;
          break;
        }
      check_internal(moved >= 0, "install: identity strong generator");
      base_.push_back(moved);
      levels_.push_back(Level{});
    }
    check_internal(r(base_[at]) != base_[at], "install: generator fixes its level base");
    sgs_.push_back(r);
  }

  void rebuild_transversal(int i, const std::vector<Permutation>& gens) {
    Level& lv = levels_[i];
    lv.transversal.clear();
    lv.transversal.emplace(base_[i], Permutation::identity(degree_));
    std::vector<int> frontier{base_[i]};
    for (size_t f = 0; f < frontier.size(); ++f) {
      int p = frontier[f];
      const Permutation up = lv.transversal.at(p);
      for (const auto& s : gens) {
        int q = s(p);
        if (!lv.transversal.count(q)) {
          lv.transversal.emplace(q, up * s);
          frontier.push_back(q);
        }
      }
    }
  }

  // Re-establishes the chain property at level i, assuming all deeper levels
  // are complete: rebuilds the orbit/transversal and pushes every Schreier
  // generator through the deeper chain, installing nontrivial residues
  // (which re-completes the deeper levels they touch).
  void close_level(int i) {
    std::vector<Permutation> gens = level_generators(i);
    rebuild_transversal(i, gens);
    std::vector<int> pts;
    for (const auto& [p, _] : levels_[i].transversal) pts.push_back(p);
    for (int p : pts) {
      const Permutation up = levels_[i].transversal.at(p);
      for (const auto& s : gens) {
        int q = s(p);
        auto itq = levels_[i].transversal.find(q);
        check_internal(itq != levels_[i].transversal.end(), "close_level: orbit not closed");
        Permutation schreier = up * s * itq->second.inverse();
        if (schreier.is_identity()) continue;
        auto [residue, level] = sift(schreier, i + 1);
        if (residue.is_identity()) continue;
        install(level, residue);
        for (int j = level; j >= i + 1; --j) close_level(j);
      }
    }
  }

  bool enumerate(int i, const Permutation& acc,
                 const std::function<bool(const Permutation&)>& fn) const {
    if (i < 0) return fn(acc);
    for (const auto& [p, rep] : levels_[i].transversal)
      if (!enumerate(i - 1, acc * rep, fn)) return false;
    return true;
  }
};

// The subgroup of elements satisfying `keep`, when `keep` is multiplicative
// with index at most 2 (callers must guarantee this).  Uses the Schreier
// generators for the two-coset transversal {id, swap} where `swap` is any
// non-kept generator.  Returns the whole group when every generator is kept.
inline PermGroup index_two_subgroup(const PermGroup& g,
                                    const std::function<bool(const Permutation&)>& keep) {
  const std::vector<Permutation>& gens = g.generators();
  Permutation swap = Permutation::identity(g.degree());
  bool found_swap = false;
  for (const auto& s : gens)
    if (!keep(s)) {
      swap = s;
      found_swap = true;
      break;
    }
  if (!found_swap) return g;  // every generator kept => the subgroup is G itself
  std::vector<Permutation> sub;
  Permutation swap_inv = swap.inverse();
  for (const auto& s : gens) {
    if (keep(s)) {
      sub.push_back(s);                    // coset id, stays in subgroup
      sub.push_back(swap * s * swap_inv);  // conjugate from coset swap
    } else {
      sub.push_back(s * swap_inv);  // falls back into the subgroup
      sub.push_back(swap * s);
    }
  }
  PermGroup h = PermGroup::from_generators(g.degree(), sub);
  check_internal(h.order() * 2 == g.order(), "index_two_subgroup: unexpected index");
  return h;
}

}  // namespace tfcover
