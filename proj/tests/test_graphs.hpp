// Shared graph builders and brute-force oracles for the test suites.  These
// are deliberately independent of the library's own named-graph constructors
// so that they can serve as cross-checks.
#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "tfcover/graph.hpp"
#include "tfcover/permutation.hpp"

namespace testgraphs {

using tfcover::Graph;
using tfcover::Permutation;

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

// Generalized Petersen graph GP(10,3): outer 10-ring, inner star step 3.
inline Graph desargues() {
  Graph g(20);
  for (int i = 0; i < 10; ++i) {
    g.add_edge(i, (i + 1) % 10);
    g.add_edge(i, 10 + i);
    g.add_edge(10 + i, 10 + (i + 3) % 10);
  }
  return g;
}

inline Graph hypercube(int d) {
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

// The 12-vertex asymmetric graph admitting the two-sided automorphism pair
// (gamma, gamma^-1) with gamma = (0 1 2)(3 4 5)(6 7 8)(9 10 11) in 0-based
// labels.  Drawn edge list, converted from 1-based labels.
inline Graph gamma_asymmetric() {
  Graph g(12);
  const int edges1[][2] = {{6, 7},  {7, 12}, {12, 6}, {6, 1},  {6, 3},  {1, 5},
                           {3, 4},  {5, 10}, {4, 9},  {9, 10}, {4, 2},  {5, 2},
                           {4, 11}, {5, 8},  {11, 8}, {1, 12}, {2, 11}, {3, 10}};
  for (auto [u, v] : edges1) g.add_edge(u - 1, v - 1);
  return g;
}

inline Graph graph_from_mask(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline long long brute_aut_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  long long count = 0;
  do {
    if (tfcover::is_automorphism(g, Permutation(img))) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return false;
  int n = g.vertex_count();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    if (tfcover::is_isomorphism(g, h, Permutation(img))) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

}  // namespace testgraphs
