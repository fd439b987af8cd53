#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "mcp/geometry.hpp"

namespace mcp {

/// Undirected edge between two point indices; canonical form has u < v.
struct Edge {
  Index u = 0;
  Index v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;

inline Edge make_edge(Index a, Index b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::uint64_t edge_key(Index a, Index b) {
  const Edge e = make_edge(a, b);
  return (std::uint64_t(std::uint32_t(e.u)) << 32) | std::uint32_t(e.v);
}

/// Normalized, sorted, deduplicated copy.
inline EdgeSet canonical(EdgeSet edges) {
  for (Edge& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace mcp
