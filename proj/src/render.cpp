#include "mcp/render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "mcp/subdivision.hpp"

namespace mcp {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

struct Frame {
  Coord min_x, max_y;
  double scale;

  double x(const Point& p) const { return kMargin + double(p.x - min_x) * scale; }
  double y(const Point& p) const { return kMargin + double(max_y - p.y) * scale; }
};

bool structural(const FeasibilityReport& report) {
  return report.has(ViolationKind::BadIndex) || report.has(ViolationKind::DuplicateEdge) ||
         report.has(ViolationKind::CrossingEdges) || report.has(ViolationKind::PointOnEdge);
}

}  // namespace

std::string render_svg(const Instance& instance, std::span<const Edge> edges, const FeasibilityReport& report) {
  const auto& pts = instance.points;
  const auto [min_x_it, max_x_it] = std::minmax_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.x < b.x; });
  const auto [min_y_it, max_y_it] = std::minmax_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.y < b.y; });
  const double span = double(std::max<Coord>({max_x_it->x - min_x_it->x, max_y_it->y - min_y_it->y, 1}));
  const Frame frame{min_x_it->x, max_y_it->y, (kCanvas - 2 * kMargin) / span};
  const double width = 2 * kMargin + double(max_x_it->x - min_x_it->x) * frame.scale;
  const double height = 2 * kMargin + double(max_y_it->y - min_y_it->y) * frame.scale;

  std::unordered_set<Index> bad_points;
  std::set<Edge> bad_edges, missing;
  for (const Violation& v : report.violations) {
    const auto& ix = v.indices;
    switch (v.kind) {
      case ViolationKind::CrossingEdges:
        bad_edges.insert(make_edge(ix[0], ix[1]));
        bad_edges.insert(make_edge(ix[2], ix[3]));
        break;
      case ViolationKind::PointOnEdge:
        bad_points.insert(ix[0]);
        bad_edges.insert(make_edge(ix[1], ix[2]));
        break;
      case ViolationKind::DuplicateEdge: bad_edges.insert(make_edge(ix[0], ix[1])); break;
      case ViolationKind::MissingHullEdge: missing.insert(make_edge(ix[0], ix[1])); break;
      case ViolationKind::IsolatedPoint:
      case ViolationKind::PointInFace: bad_points.insert(ix[0]); break;
      default: break;
    }
  }

  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.1f}\" height=\"{:.1f}\" "
      "viewBox=\"0 0 {:.1f} {:.1f}\">\n"
      "<title>{}</title>\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      width, height, width, height, instance.name);

  auto polygon = [&](const std::vector<Index>& cycle, std::string_view attrs) {
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out += fmt::format("{}{:.2f},{:.2f}", i ? " " : "", frame.x(pts[cycle[i]]), frame.y(pts[cycle[i]]));
    out += fmt::format("\" {}/>\n", attrs);
  };

  const std::size_t n = pts.size();
  std::vector<Edge> valid;
  valid.reserve(edges.size());
  for (const Edge& e : edges)
    if (e.u >= 0 && e.v >= 0 && std::size_t(e.u) < n && std::size_t(e.v) < n && e.u != e.v) valid.push_back(e);

  if (!structural(report)) {
    std::vector<Edge> unique = canonical(valid);
    const Subdivision sub = Subdivision::build_trusted(pts, unique);
    for (Index f : sub.live_faces()) {
      if (!sub.face(f).bounded) continue;
      polygon(sub.face_vertices(f), sub.face_is_convex(f) ? "class=\"face\" fill=\"#cfe3f7\" stroke=\"none\""
                                                          : "class=\"face\" fill=\"#f7c8c8\" stroke=\"none\"");
    }
  }

  const Hull hull = convex_hull(pts);
  polygon(hull.corners, "class=\"hull\" fill=\"none\" stroke=\"#888888\" stroke-width=\"3\"");

  for (const Edge& e : valid) {
    const bool bad = bad_edges.contains(make_edge(e.u, e.v));
    out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
                       frame.x(pts[e.u]), frame.y(pts[e.u]), frame.x(pts[e.v]), frame.y(pts[e.v]),
                       bad ? "#d00000" : "#1f3b73", bad ? 2.5 : 1.0);
  }
  for (const Edge& e : missing) {
    out += fmt::format(
        "<path class=\"missing\" d=\"M {:.2f} {:.2f} L {:.2f} {:.2f}\" stroke=\"#d00000\" stroke-dasharray=\"6 4\" "
        "stroke-width=\"2\"/>\n",
        frame.x(pts[e.u]), frame.y(pts[e.u]), frame.x(pts[e.v]), frame.y(pts[e.v]));
  }
  const double radius = n > 2000 ? 1.0 : 3.0;
  for (const Point& p : pts) {
    const bool bad = bad_points.contains(p.index);
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{}\" fill=\"{}\"/>\n", frame.x(p), frame.y(p),
                       bad ? radius * 2 : radius, bad ? "#d00000" : "black");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mcp
