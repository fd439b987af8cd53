#pragma once

// Reference checks for tests. Shares no geometry or subdivision code with the
// library: its own predicates, hull, and an angular-gap feasibility rule.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

struct P {
  std::int64_t x, y;
};

using Seg = std::pair<int, int>;

/// Points on the convex hull boundary, including points inside hull edges.
std::size_t hull_boundary_count(const std::vector<P>& pts);

/// Convex partition test: every index valid, no duplicates, no point inside
/// an edge, no crossings, hull boundary present, connected, and at every vertex
/// each angular gap between consecutive edges is at most pi except the outside
/// wedge at hull points.
bool feasible(const std::vector<P>& pts, const std::vector<Seg>& edges);

struct Optimum {
  std::size_t faces = 0;  // bounded faces of a best partition
  std::size_t edges = 0;
  std::size_t partitions = 0;  // feasible subsets seen
};

/// Minimum bounded-face count over all feasible subsets of the complete
/// segment set (segments containing no other point). Meant for n <= 7.
Optimum brute_force(const std::vector<P>& pts);

}  // namespace oracle
