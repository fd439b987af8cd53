#pragma once

#include <span>
#include <unordered_set>
#include <vector>

#include "mcp/edge.hpp"
#include "mcp/instance.hpp"
#include "mcp/subdivision.hpp"

namespace mcp {

/// Sweep order: primary key a*x + b*y, ties broken by -b*x + a*y.
/// The default (1, 0) is the lexicographic (x, y) order.
struct SweepDirection {
  Coord a = 1;
  Coord b = 0;
};

/// Incremental sweep triangulation of the convex hull of `points`, which may be
/// any subset of an instance; edges refer to Point::index. Collinear points are
/// handled exactly: no edge passes through a third point and every hull
/// boundary point is a vertex. Throws Error(DegenerateHull).
EdgeSet sweep_triangulation(std::span<const Point> points, SweepDirection direction = {});

using EdgeKeySet = std::unordered_set<std::uint64_t>;

/// Lawson flips towards the (constrained) Delaunay triangulation, never touching
/// edges in `fixed`. Returns the number of flips performed.
std::size_t lawson_flip(Subdivision& tri, const EdgeKeySet& fixed = {});

/// Makes the segment uv an edge: the triangles it crosses are removed and the two
/// resulting cavities are re-triangulated Delaunay-style. The segment must not
/// pass through any point. Returns false, leaving `tri` unchanged, when uv
/// crosses an edge in `fixed`.
bool insert_constraint(Subdivision& tri, Edge uv, const EdgeKeySet& fixed);

/// Maximal runs of at least 3 points on a common horizontal or vertical line,
/// each ordered along its line. Longest runs first.
std::vector<std::vector<Index>> collinear_runs(const Instance& instance);

}  // namespace mcp
