#pragma once

#include <string>
#include <vector>

#include "tfcover/common.hpp"
#include "tfcover/graph.hpp"

namespace tfcover {

// graph6: compact printable encoding of simple undirected graphs.
// Layout: a size header, then the upper-triangle adjacency bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per character, each
// character offset by 63; pad bits are zero.

namespace g6detail {

constexpr int kOffset = 63;

inline void append_bits(std::string& out, const std::vector<char>& bits) {
  int group = 0, filled = 0;
  for (char b : bits) {
    group = (group << 1) | (b ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(group + kOffset));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kOffset));
  }
}

}  // namespace g6detail

inline std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  require(n <= 258047, "to_graph6: vertex count exceeds supported range");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + g6detail::kOffset));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + g6detail::kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + g6detail::kOffset));
    out.push_back(static_cast<char>((n & 63) + g6detail::kOffset));
  }
  std::vector<char> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
  g6detail::append_bits(out, bits);
  return out;
}

inline Graph from_graph6(const std::string& s) {
  if (s.empty()) throw parse_error("graph6: empty string");
  for (char c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
      throw parse_error("graph6: character out of printable range");
  }
  size_t pos = 0;
  long long n;
  if (s[pos] == 126) {
    if (s.size() >= 2 && s[1] == 126)
      throw parse_error("graph6: 8-byte size header not supported");
    if (s.size() < 4) throw parse_error("graph6: truncated size header");
    n = 0;
    for (int i = 1; i <= 3; ++i)
      n = (n << 6) | (static_cast<unsigned char>(s[i]) - g6detail::kOffset);
    pos = 4;
    if (n <= 62) throw parse_error("graph6: non-minimal size header");
  } else {
    n = static_cast<unsigned char>(s[0]) - g6detail::kOffset;
    pos = 1;
  }
  long long nbits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() - pos != need)
    throw parse_error("graph6: body length does not match vertex count");
  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = static_cast<unsigned char>(s[pos + bit / 6]) - g6detail::kOffset;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Trailing pad bits must be zero for a canonical encoding.
  for (long long b = nbits; b < static_cast<long long>(need) * 6; ++b) {
    int byte = static_cast<unsigned char>(s[pos + b / 6]) - g6detail::kOffset;
    if ((byte >> (5 - b % 6)) & 1) throw parse_error("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace tfcover
