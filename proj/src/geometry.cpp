#include "mcp/geometry.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "mcp/error.hpp"

namespace mcp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateHull: return "DegenerateHull";
    case ErrorKind::CrossingEdges: return "CrossingEdges";
    case ErrorKind::PointOnEdge: return "PointOnEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotRemovable: return "NotRemovable";
    case ErrorKind::InfeasibleSolution: return "InfeasibleSolution";
    case ErrorKind::TooDense: return "TooDense";
    case ErrorKind::EmptyMap: return "EmptyMap";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NameMismatch: return "NameMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool point_on_open_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p) != 0) return false;
  return dot(a, b, p) > 0 && dot(b, a, p) > 0;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = sign(orientation(a, b, c));
  const int o2 = sign(orientation(a, b, d));
  const int o3 = sign(orientation(c, d, a));
  const int o4 = sign(orientation(c, d, b));

  if (o1 == 0 && o2 == 0) {
    // All four collinear: project onto ab and intersect the parameter intervals.
    const Wide len = dot(a, b, b);
    const Wide tc = dot(a, b, c);
    const Wide td = dot(a, b, d);
    const Wide lo = std::max<Wide>(0, std::min(tc, td));
    const Wide hi = std::min<Wide>(len, std::max(tc, td));
    return hi > lo;
  }
  // Any other zero means the lines meet at an endpoint of one of the segments.
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return false;
  return o1 != o2 && o3 != o4;
}

bool angle_at_most_pi(const Point& prev, const Point& apex, const Point& next) {
  const Wide c = cross(prev, apex, next);
  if (c > 0) return true;
  if (c < 0) return false;
  // Collinear: straight (pi) if the chain keeps its direction, spike (2*pi) otherwise.
  const Wide forward = Wide(apex.x - prev.x) * (next.x - apex.x) + Wide(apex.y - prev.y) * (next.y - apex.y);
  return forward > 0;
}

namespace {

template <class T>
T in_circle_det(T adx, T ady, T bdx, T bdy, T cdx, T cdy) {
  const T alift = adx * adx + ady * ady;
  const T blift = bdx * bdx + bdy * bdy;
  const T clift = cdx * cdx + cdy * cdy;
  return alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) + clift * (adx * bdy - bdx * ady);
}

}  // namespace

int in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Coord adx = a.x - d.x, ady = a.y - d.y;
  const Coord bdx = b.x - d.x, bdy = b.y - d.y;
  const Coord cdx = c.x - d.x, cdy = c.y - d.y;
  constexpr Coord kFast = Coord{1} << 30;
  const Coord span = std::max({std::abs(adx), std::abs(ady), std::abs(bdx), std::abs(bdy), std::abs(cdx), std::abs(cdy)});
  if (span < kFast) {
    const Wide det = in_circle_det<Wide>(adx, ady, bdx, bdy, cdx, cdy);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
  }
  using boost::multiprecision::int256_t;
  const int256_t det = in_circle_det<int256_t>(adx, ady, bdx, bdy, cdx, cdy);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

Wide twice_signed_area(std::span<const Point> polygon) {
  Wide sum = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    sum += Wide(p.x) * q.y - Wide(q.x) * p.y;
  }
  return sum;
}

bool angle_less(Coord ax, Coord ay, Coord bx, Coord by) {
  const bool lower_a = ay < 0 || (ay == 0 && ax < 0);
  const bool lower_b = by < 0 || (by == 0 && bx < 0);
  if (lower_a != lower_b) return !lower_a;
  return Wide(ax) * by - Wide(ay) * bx > 0;
}

Hull convex_hull(std::span<const Point> points) {
  if (points.size() < 3) throw Error(ErrorKind::DegenerateHull, "need at least 3 points");

  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });

  // Andrew's monotone chain, dropping collinear points.
  std::vector<Point> chain(2 * sorted.size());
  std::size_t k = 0;
  for (const Point& p : sorted) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = sorted[i];
    while (k >= lower && cross(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  chain.resize(k - 1);
  if (chain.size() < 3) throw Error(ErrorKind::DegenerateHull, "all points are collinear");

  Hull hull;
  hull.corners.reserve(chain.size());
  for (const Point& p : chain) hull.corners.push_back(p.index);

  // Edge-interior boundary points, ordered along each hull edge.
  std::vector<std::vector<std::pair<Wide, Index>>> on_edge(chain.size());
  for (const Point& p : points) {
    for (std::size_t e = 0; e < chain.size(); ++e) {
      const Point& a = chain[e];
      const Point& b = chain[(e + 1) % chain.size()];
      if (point_on_open_segment(p, a, b)) {
        on_edge[e].emplace_back(dot(a, b, p), p.index);
        break;
      }
    }
  }
  for (std::size_t e = 0; e < chain.size(); ++e) {
    hull.boundary.push_back(chain[e].index);
    std::sort(on_edge[e].begin(), on_edge[e].end());
    for (const auto& [t, idx] : on_edge[e]) hull.boundary.push_back(idx);
  }
  return hull;
}

}  // namespace mcp
