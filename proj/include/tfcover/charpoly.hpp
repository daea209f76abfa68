#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "tfcover/common.hpp"
#include "tfcover/graph.hpp"

namespace tfcover {

using Integer = boost::multiprecision::cpp_int;

// Characteristic polynomial det(xI - A) of the adjacency matrix, exact.
// Returned as the n+1 coefficients [1, c1, ..., cn] of
// x^n + c1 x^(n-1) + ... + cn.
//
// Faddeev–LeVerrier recurrence over arbitrary-precision integers:
//   M1 = A,  c1 = -tr(M1),  Mk = A (M_{k-1} + c_{k-1} I),  ck = -tr(Mk)/k,
// where every division is exact.
inline std::vector<Integer> char_poly(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Integer> coeff(n + 1);
  coeff[0] = 1;
  if (n == 0) return coeff;

  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n, 0));
  for (auto [u, v] : g.edges()) {
    a[u][v] = 1;
    a[v][u] = 1;
  }

  std::vector<std::vector<Integer>> m = a;
  for (int k = 1; k <= n; ++k) {
    Integer tr = 0;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    check_internal(tr % k == 0, "char_poly: trace not divisible in recurrence");
    coeff[k] = -tr / k;
    if (k == n) break;
    for (int i = 0; i < n; ++i) m[i][i] += coeff[k];
    std::vector<std::vector<Integer>> next(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;  // adjacency entries are 0/1: row-sparse product
        for (int j = 0; j < n; ++j) next[i][j] += m[l][j];
      }
    m = std::move(next);
  }
  return coeff;
}

// Human-readable form, highest power first, e.g. "x^3 - 2x + 1".
inline std::string char_poly_string(const std::vector<Integer>& coeff,
                                    const std::string& var = "x") {
  int n = static_cast<int>(coeff.size()) - 1;
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= n; ++k) {
    const Integer& c = coeff[k];
    if (c == 0) continue;
    Integer abs = c < 0 ? Integer(-c) : c;
    int pow = n - k;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs != 1 || pow == 0) os << abs.str();
    if (pow > 0) {
      os << var;
      if (pow > 1) os << "^" << pow;
    }
  }
  if (first) os << "0";
  return os.str();
}

inline bool cospectral(const Graph& g, const Graph& h) {
  return char_poly(g) == char_poly(h);
}

}  // namespace tfcover
