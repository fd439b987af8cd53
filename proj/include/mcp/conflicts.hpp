#pragma once

#include <span>
#include <vector>

#include "mcp/edge.hpp"
#include "mcp/geometry.hpp"

namespace mcp {

/// A geometric conflict between edges of a candidate plane graph.
///  - Crossing: `first` and `second` are positions of two edges in the edge list.
///  - PointOnEdge: `first` is a point index, `second` the position of the edge containing it.
struct Conflict {
  enum class Kind { Crossing, PointOnEdge };
  Kind kind;
  Index first;
  Index second;

  friend auto operator<=>(const Conflict&, const Conflict&) = default;
};

/// Exhaustive pairwise check. Quadratic; the reference the bucketed kernel is tested against.
std::vector<Conflict> find_conflicts_serial(std::span<const Point> points, std::span<const Edge> edges);

/// Uniform-grid bucketing, cells scanned in parallel with OpenMP.
/// `threads` <= 0 uses the OpenMP default. Output is sorted and identical to the serial reference.
std::vector<Conflict> find_conflicts(std::span<const Point> points, std::span<const Edge> edges, int threads = 0);

}  // namespace mcp
