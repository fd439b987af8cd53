#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mcp {

using Coord = std::int64_t;
using Index = std::int32_t;
using Wide = __int128;

/// Coordinates must satisfy |x|, |y| < 2^31 so that every 2x2 determinant
/// fits in 128 bits.
inline constexpr Coord kCoordLimit = Coord{1} << 31;

struct Point {
  Index index = 0;
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline bool coord_in_range(Coord v) { return v > -kCoordLimit && v < kCoordLimit; }

enum class Orientation : int { Right = -1, Collinear = 0, Left = 1 };

/// (q - p) x (r - p), exact.
inline Wide cross(const Point& p, const Point& q, const Point& r) {
  return Wide(q.x - p.x) * (r.y - p.y) - Wide(q.y - p.y) * (r.x - p.x);
}

/// (q - p) . (r - p), exact.
inline Wide dot(const Point& p, const Point& q, const Point& r) {
  return Wide(q.x - p.x) * (r.x - p.x) + Wide(q.y - p.y) * (r.y - p.y);
}

inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Wide c = cross(p, q, r);
  return c > 0 ? Orientation::Left : (c < 0 ? Orientation::Right : Orientation::Collinear);
}

inline int sign(Orientation o) { return static_cast<int>(o); }

/// True iff p is collinear with a and b and strictly between them.
bool point_on_open_segment(const Point& p, const Point& a, const Point& b);

/// True iff the open segments ab and cd share a point interior to both.
/// Collinear overlap of positive length counts; touching at an endpoint does not.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// Interior angle at apex on the left of prev -> apex -> next is at most pi.
/// A straight continuation is exactly pi; a reversal (spike) is 2*pi.
bool angle_at_most_pi(const Point& prev, const Point& apex, const Point& next);

/// Positive iff d lies strictly inside the circle through the counterclockwise
/// triangle a, b, c; zero when cocircular.
int in_circle(const Point& a, const Point& b, const Point& c, const Point& d);

/// Twice the signed area of a closed polygon.
Wide twice_signed_area(std::span<const Point> polygon);

/// Counterclockwise angular order of direction vectors around a common origin,
/// starting at the positive x axis.
bool angle_less(Coord ax, Coord ay, Coord bx, Coord by);

struct Hull {
  /// Strict corners, counterclockwise, starting at the lexicographically smallest point.
  std::vector<Index> corners;
  /// Every point on the boundary (corners and edge-interior points), counterclockwise.
  std::vector<Index> boundary;

  std::size_t boundary_count() const { return boundary.size(); }
};

/// Throws Error(DegenerateHull) for fewer than 3 points or an all-collinear set.
Hull convex_hull(std::span<const Point> points);

}  // namespace mcp
