#pragma once

// Isomorph-free exhaustive generation of small graphs.
//
// Graphs are grown level by level: every graph on m vertices arises from some
// graph on m-1 vertices by appending one vertex together with an arbitrary
// neighbourhood (delete any vertex of the target and relabel).  Deduplication
// uses canonical graph6 strings, so each isomorphism class appears exactly
// once and the output order (lexicographic on canonical graph6) is
// deterministic.
//
// This is a utility for producing test fixtures and census inputs; it is
// intentionally simple and only meant for small vertex counts (n <= 10,
// roughly 12 million canonical-form calls at the top end).

#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "tfcover/canonical.hpp"
#include "tfcover/common.hpp"
#include "tfcover/graph.hpp"
#include "tfcover/graph6.hpp"

namespace tfcover {

// All graphs on n vertices up to isomorphism, as canonical graph6 strings in
// lexicographic order.
inline std::vector<std::string> enumerate_all_graph6(int n) {
  require(n >= 1 && n <= 10, "enumerate_all_graph6: n must be between 1 and 10");
  std::vector<std::string> level = {to_graph6(Graph(1))};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::string> seen;
    for (const std::string& s : level) {
      Graph parent = from_graph6(s);
      const unsigned subsets = 1u << (m - 1);
      for (unsigned mask = 0; mask < subsets; ++mask) {
        Graph child(m);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for (int b = 0; b < m - 1; ++b)
          if (mask & (1u << b)) child.add_edge(b, m - 1);
        seen.insert(certificate(child));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

// Connected graphs on n vertices up to isomorphism, canonical graph6,
// lexicographic order.
inline std::vector<std::string> enumerate_connected_graph6(int n) {
  std::vector<std::string> out;
  for (const std::string& s : enumerate_all_graph6(n))
    if (is_connected(from_graph6(s))) out.push_back(s);
  return out;
}

}  // namespace tfcover
