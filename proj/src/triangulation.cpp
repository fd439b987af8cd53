#include "mcp/triangulation.hpp"

#include <algorithm>

#include "mcp/error.hpp"

namespace mcp {

EdgeSet sweep_triangulation(std::span<const Point> points, SweepDirection dir) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorKind::DegenerateHull, "need at least 3 points");
  if (dir.a == 0 && dir.b == 0) throw Error(ErrorKind::InvalidArgument, "sweep direction must be non-zero");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto key = [&](const Point& p) {
    return std::pair{Wide(dir.a) * p.x + Wide(dir.b) * p.y, -Wide(dir.b) * p.x + Wide(dir.a) * p.y};
  };
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return key(points[i]) < key(points[j]); });
  auto at = [&](std::size_t k) -> const Point& { return points[order[k]]; };

  std::size_t k = 2;
  while (k < n && orientation(at(0), at(1), at(k)) == Orientation::Collinear) ++k;
  if (k == n) throw Error(ErrorKind::DegenerateHull, "all points are collinear");

  EdgeSet edges;
  edges.reserve(3 * n);
  // Seed: the collinear prefix as a chain, fanned to the first off-line point.
  for (std::size_t i = 0; i + 1 < k; ++i) edges.push_back(make_edge(at(i).index, at(i + 1).index));
  for (std::size_t i = 0; i < k; ++i) edges.push_back(make_edge(at(i).index, at(k).index));

  // Hull as a circular list over sort positions, counterclockwise.
  std::vector<std::size_t> next(n), prev(n);
  auto link = [&](std::size_t a, std::size_t b) {
    next[a] = b;
    prev[b] = a;
  };
  if (orientation(at(0), at(k - 1), at(k)) == Orientation::Left) {
    for (std::size_t i = 0; i + 1 < k; ++i) link(i, i + 1);
    link(k - 1, k);
    link(k, 0);
  } else {
    for (std::size_t i = k - 1; i > 0; --i) link(i, i - 1);
    link(0, k);
    link(k, k - 1);
  }

  // The previous point is the extreme hull corner in sweep order, so the
  // strictly visible chain always contains one of its edges.
  std::size_t last = k;
  for (std::size_t i = k + 1; i < n; ++i) {
    const Point& p = at(i);
    std::size_t right = last;
    while (orientation(at(right), at(next[right]), p) == Orientation::Right) right = next[right];
    std::size_t left = last;
    while (orientation(at(prev[left]), at(left), p) == Orientation::Right) left = prev[left];
    for (std::size_t v = left;; v = next[v]) {
      edges.push_back(make_edge(at(v).index, p.index));
      if (v == right) break;
    }
    link(left, i);
    link(i, right);
    last = i;
  }
  return edges;
}

std::size_t lawson_flip(Subdivision& tri, const EdgeKeySet& fixed) {
  std::vector<Edge> stack = tri.edges();
  std::size_t flips = 0;
  auto push_if_free = [&](Index a, Index b) {
    if (!fixed.contains(edge_key(a, b))) stack.push_back(make_edge(a, b));
  };
  while (!stack.empty()) {
    const Edge e = stack.back();
    stack.pop_back();
    if (fixed.contains(edge_key(e.u, e.v))) continue;
    const auto apexes = tri.opposite_apexes(e);
    if (!apexes) continue;
    const auto [a, b] = *apexes;
    if (in_circle(tri.point(e.u), tri.point(e.v), tri.point(a), tri.point(b)) <= 0) continue;
    if (!tri.flip(e)) continue;
    ++flips;
    push_if_free(e.u, a);
    push_if_free(a, e.v);
    push_if_free(e.v, b);
    push_if_free(b, e.u);
  }
  return flips;
}

namespace {

// Edges of the triangulation properly crossed by the segment uv, found by
// walking the triangles it passes through.
std::vector<Edge> crossed_edges(const Subdivision& tri, Index u, Index v) {
  const Point& pu = tri.point(u);
  const Point& pv = tri.point(v);
  std::vector<Edge> out;
  Index right = Subdivision::kNone, left = Subdivision::kNone;
  const auto around = tri.outgoing(u);
  for (std::size_t i = 0; i < around.size(); ++i) {
    const Index h = around[i];
    if (!tri.face(tri.face_of(h)).bounded) continue;
    const Index x = tri.target(h);
    const Index y = tri.target(around[(i + 1) % around.size()]);
    if (orientation(pu, tri.point(x), pv) == Orientation::Left && orientation(pu, tri.point(y), pv) == Orientation::Right) {
      right = x;
      left = y;
      break;
    }
  }
  if (right == Subdivision::kNone) return out;
  while (true) {
    out.push_back(make_edge(left, right));
    const auto far = tri.find(left, right);
    if (!far) break;
    const Index z = tri.target(tri.next(*far));
    if (z == v) break;
    if (orientation(pu, pv, tri.point(z)) == Orientation::Left) {
      left = z;
    } else {
      right = z;
    }
  }
  return out;
}

// Triangulates the counterclockwise cycle a, b, chain... whose edge ab exists,
// picking the chain vertex whose circle through a and b is empty of the others.
void fill_pseudo_polygon(Subdivision& tri, Index a, Index b, std::span<const Index> chain) {
  if (chain.size() <= 1) return;
  std::size_t best = 0;
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (in_circle(tri.point(a), tri.point(b), tri.point(chain[best]), tri.point(chain[i])) > 0) best = i;
  const Index c = chain[best];
  if (best > 0) tri.insert_edge(make_edge(c, b));
  if (best + 1 < chain.size()) tri.insert_edge(make_edge(a, c));
  fill_pseudo_polygon(tri, c, b, chain.first(best));
  fill_pseudo_polygon(tri, a, c, chain.subspan(best + 1));
}

}  // namespace

bool insert_constraint(Subdivision& tri, Edge uv, const EdgeKeySet& fixed) {
  if (tri.contains(uv)) return true;
  const auto crossing = crossed_edges(tri, uv.u, uv.v);
  if (crossing.empty()) return false;
  for (const Edge& e : crossing)
    if (fixed.contains(edge_key(e.u, e.v))) return false;

  // Open the cavity along uv, then re-triangulate the pseudo-polygon on each side.
  for (const Edge& e : crossing) tri.erase_edge(e);
  tri.insert_edge(uv);
  const Index h = *tri.find(uv.u, uv.v);
  for (const Index side : {h, Subdivision::twin(h)}) {
    std::vector<Index> chain;
    for (Index g = tri.next(side); tri.target(g) != tri.origin(side); g = tri.next(g)) chain.push_back(tri.target(g));
    fill_pseudo_polygon(tri, tri.origin(side), tri.target(side), chain);
  }
  return true;
}

std::vector<std::vector<Index>> collinear_runs(const Instance& instance) {
  std::vector<std::vector<Index>> runs;
  std::vector<Index> order(instance.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = Index(i);
  const auto& pts = instance.points;

  auto collect = [&](auto line_of, auto along) {
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
      return std::pair{line_of(pts[a]), along(pts[a])} < std::pair{line_of(pts[b]), along(pts[b])};
    });
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j < order.size() && line_of(pts[order[j]]) == line_of(pts[order[i]])) ++j;
      if (j - i >= 3) runs.emplace_back(order.begin() + std::ptrdiff_t(i), order.begin() + std::ptrdiff_t(j));
      i = j;
    }
  };
  collect([](const Point& p) { return p.y; }, [](const Point& p) { return p.x; });
  collect([](const Point& p) { return p.x; }, [](const Point& p) { return p.y; });
  std::stable_sort(runs.begin(), runs.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return runs;
}

}  // namespace mcp
