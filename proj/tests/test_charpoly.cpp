#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tfcover/charpoly.hpp"
#include "tfcover/graph.hpp"

using namespace tfcover;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

// Independent oracle: exact determinant by fraction-free (Bareiss)
// elimination with row pivoting.
Integer det_bareiss(std::vector<std::vector<Integer>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv == -1) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer char_matrix_det(const Graph& g, const Integer& t) {
  int n = g.vertex_count();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = t;
  for (auto [u, v] : g.edges()) {
    m[u][v] = -1;
    m[v][u] = -1;
  }
  return det_bareiss(std::move(m));
}

Integer eval_poly(const std::vector<Integer>& coeff, const Integer& t) {
  Integer acc = 0;
  for (const Integer& c : coeff) acc = acc * t + c;
  return acc;
}

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("characteristic polynomial of closed-form spectra") {
  // K4: (x-3)(x+1)^3 = x^4 - 6x^2 - 8x - 3.
  REQUIRE(char_poly(complete_graph(4)) ==
          std::vector<Integer>{1, 0, -6, -8, -3});
  // C4: x^2 (x-2)(x+2) = x^4 - 4x^2.
  REQUIRE(char_poly(cycle_graph(4)) == std::vector<Integer>{1, 0, -4, 0, 0});
  // Path on 3 vertices: x^3 - 2x.
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  REQUIRE(char_poly(p3) == std::vector<Integer>{1, 0, -2, 0});
  // Edgeless graphs: x^n.
  REQUIRE(char_poly(Graph(3)) == std::vector<Integer>{1, 0, 0, 0});
  REQUIRE(char_poly(Graph(0)) == std::vector<Integer>{1});
}

TEST_CASE("Petersen spectrum is (x-3)(x-1)^5(x+2)^4") {
  auto coeff = char_poly(petersen());
  REQUIRE(coeff.size() == 11);
  for (Integer t = -5; t <= 5; ++t) {
    Integer expected = (t - 3);
    for (int i = 0; i < 5; ++i) expected *= (t - 1);
    for (int i = 0; i < 4; ++i) expected *= (t + 2);
    REQUIRE(eval_poly(coeff, t) == expected);
  }
}

TEST_CASE("a classic cospectral non-equal pair: C4 + K1 versus the 4-star") {
  Graph saltire = disjoint_union(cycle_graph(4), Graph(1));
  Graph star(5);
  for (int i = 1; i < 5; ++i) star.add_edge(0, i);
  REQUIRE(saltire != star);
  REQUIRE(cospectral(saltire, star));
  REQUIRE(char_poly(star) == std::vector<Integer>{1, 0, -4, 0, 0, 0});
  REQUIRE_FALSE(cospectral(star, complete_graph(5)));
}

TEST_CASE("low-order coefficients count edges and triangles") {
  for (unsigned seed : {1u, 2u, 3u}) {
    Graph g = random_graph(9, 0.4, seed);
    auto coeff = char_poly(g);
    REQUIRE(coeff[1] == 0);                 // trace of adjacency is 0
    REQUIRE(coeff[2] == -g.edge_count());   // x^(n-2) coefficient
    REQUIRE(coeff[3] == -2 * count_cycles(g, 3));
  }
}

TEST_CASE("recurrence agrees with determinant oracle on random graphs") {
  for (unsigned seed : {11u, 12u, 13u, 14u}) {
    int n = 6 + static_cast<int>(seed % 4);
    Graph g = random_graph(n, 0.5, seed);
    auto coeff = char_poly(g);
    // A degree-n polynomial is pinned down by n+1 evaluation points.
    for (Integer t = 0; t <= n; ++t)
      REQUIRE(eval_poly(coeff, t) == char_matrix_det(g, t));
  }
}

TEST_CASE("polynomial pretty-printing") {
  REQUIRE(char_poly_string(char_poly(complete_graph(4))) == "x^4 - 6x^2 - 8x - 3");
  REQUIRE(char_poly_string(char_poly(cycle_graph(4))) == "x^4 - 4x^2");
  REQUIRE(char_poly_string(char_poly(Graph(1))) == "x");
  REQUIRE(char_poly_string(std::vector<Integer>{1}, "t") == "1");
  REQUIRE(char_poly_string(std::vector<Integer>{1, 0, 1}, "t") == "t^2 + 1");
}
