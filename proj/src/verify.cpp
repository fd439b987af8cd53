#include "mcp/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_map>

#include "mcp/conflicts.hpp"
#include "mcp/error.hpp"
#include "mcp/subdivision.hpp"

namespace mcp {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::BadIndex: return "BadIndex";
    case ViolationKind::DuplicateEdge: return "DuplicateEdge";
    case ViolationKind::PointOnEdge: return "PointOnEdge";
    case ViolationKind::CrossingEdges: return "CrossingEdges";
    case ViolationKind::IsolatedPoint: return "IsolatedPoint";
    case ViolationKind::PointInFace: return "PointInFace";
    case ViolationKind::MissingHullEdge: return "MissingHullEdge";
    case ViolationKind::Disconnected: return "Disconnected";
    case ViolationKind::NonConvexFace: return "NonConvexFace";
    case ViolationKind::EulerMismatch: return "EulerMismatch";
  }
  return "Unknown";
}

bool FeasibilityReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string to_decimal(const Rational& value, int digits) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  cpp_int q = (num * scale) / den;
  const cpp_int r = (num * scale) % den;
  if (2 * r > den || (2 * r == den && (q & 1) != 0)) ++q;

  std::string body = q.str();
  if (body.size() <= std::size_t(digits)) body.insert(0, std::size_t(digits) + 1 - body.size(), '0');
  std::string out = negative && q != 0 ? "-" : "";
  out += body.substr(0, body.size() - std::size_t(digits));
  if (digits > 0) out += "." + body.substr(body.size() - std::size_t(digits));
  return out;
}

std::string ScoreReport::decimal() const { return to_decimal(score()); }

FeasibilityReport verify(const Instance& instance, std::span<const Edge> edges) {
  FeasibilityReport report;
  const auto& points = instance.points;
  const Index n = Index(points.size());
  const Hull hull = convex_hull(points);
  report.n = points.size();
  report.c = hull.boundary_count();
  report.m = edges.size();
  auto add = [&](ViolationKind kind, std::vector<Index> indices, std::string detail = {}) {
    report.violations.push_back({kind, std::move(indices), std::move(detail)});
  };

  // Indices and duplicates.
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) add(ViolationKind::BadIndex, {e.u, e.v});
  }
  if (!report.violations.empty()) return report;
  {
    EdgeSet sorted(edges.begin(), edges.end());
    for (Edge& e : sorted) e = make_edge(e.u, e.v);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1] && (i < 2 || sorted[i - 2] != sorted[i]))
        add(ViolationKind::DuplicateEdge, {sorted[i].u, sorted[i].v});
  }
  if (!report.violations.empty()) return report;

  // Plane-graph geometry.
  for (const Conflict& c : find_conflicts(points, edges)) {
    if (c.kind == Conflict::Kind::Crossing) {
      const Edge& a = edges[c.first];
      const Edge& b = edges[c.second];
      add(ViolationKind::CrossingEdges, {a.u, a.v, b.u, b.v});
    } else {
      const Edge& e = edges[c.second];
      add(ViolationKind::PointOnEdge, {c.first, e.u, e.v});
    }
  }
  if (!report.violations.empty()) return report;

  // Positive degree; an isolated point off the hull boundary sits inside a face.
  std::vector<std::size_t> degree(points.size(), 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<char> on_boundary(points.size(), 0);
  for (Index b : hull.boundary) on_boundary[b] = 1;
  for (Index v = 0; v < n; ++v) {
    if (degree[v] != 0) continue;
    add(ViolationKind::IsolatedPoint, {v});
    if (!on_boundary[v]) add(ViolationKind::PointInFace, {v});
  }

  const Subdivision sub = Subdivision::build_trusted(points, edges);
  report.f = sub.counts().f;

  // The full hull boundary cycle, including collinear boundary points.
  for (std::size_t i = 0; i < hull.boundary.size(); ++i) {
    const Index a = hull.boundary[i];
    const Index b = hull.boundary[(i + 1) % hull.boundary.size()];
    if (!sub.contains(make_edge(a, b))) add(ViolationKind::MissingHullEdge, {a, b});
  }

  // Connectivity over the vertices that carry edges.
  {
    std::vector<Index> component(points.size(), -1);
    std::vector<Index> representatives;
    std::vector<Index> stack;
    for (Index s = 0; s < n; ++s) {
      if (degree[s] == 0 || component[s] != -1) continue;
      const Index id = Index(representatives.size());
      representatives.push_back(s);
      component[s] = id;
      stack.push_back(s);
      while (!stack.empty()) {
        const Index v = stack.back();
        stack.pop_back();
        for (Index h : sub.outgoing(v)) {
          const Index w = sub.target(h);
          if (component[w] == -1) {
            component[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
    if (representatives.size() > 1) add(ViolationKind::Disconnected, representatives, std::to_string(representatives.size()) + " components");
  }

  for (Index f : sub.live_faces()) {
    if (sub.face(f).bounded && !sub.face_is_convex(f)) add(ViolationKind::NonConvexFace, sub.face_vertices(f));
  }

  if (std::int64_t(report.f) != std::int64_t(report.m) - std::int64_t(report.n) + 1) {
    add(ViolationKind::EulerMismatch, {},
        "f = " + std::to_string(report.f) + " but m - n + 1 = " + std::to_string(std::int64_t(report.m) - std::int64_t(report.n) + 1));
  }

  report.feasible = report.violations.empty();
  return report;
}

namespace {

ScoreReport score_feasible(const FeasibilityReport& feasibility) {
  ScoreReport r;
  r.n = feasibility.n;
  r.c = feasibility.c;
  r.m = feasibility.m;
  r.f = feasibility.f;
  r.denominator = triangulation_edges(r.n, r.c);
  r.s = r.denominator - r.m;
  return r;
}

}  // namespace

ScoreReport score(const Instance& instance, std::span<const Edge> edges) {
  const FeasibilityReport feasibility = verify(instance, edges);
  if (!feasibility.feasible) {
    throw Error(ErrorKind::InfeasibleSolution,
                std::string(to_string(feasibility.violations.front().kind)) + " (" +
                    std::to_string(feasibility.violations.size()) + " violations)");
  }
  return score_feasible(feasibility);
}

BatchReport batch_score(std::span<const Instance> instances, std::span<const Solution> solutions, int threads) {
  std::unordered_map<std::string, const Solution*> by_name;
  for (const Solution& s : solutions) by_name.emplace(s.instance_name, &s);

  BatchReport out;
  out.rows.resize(instances.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (std::size_t i = 0; i < instances.size(); ++i) {
    BatchRow& row = out.rows[i];
    row.name = instances[i].name;
    const auto it = by_name.find(instances[i].name);
    if (it == by_name.end()) {
      row.status = BatchRow::Status::Missing;
      continue;
    }
    const FeasibilityReport feasibility = verify(instances[i], it->second->edges);
    if (!feasibility.feasible) {
      row.status = BatchRow::Status::Infeasible;
      continue;
    }
    row.status = BatchRow::Status::Scored;
    row.report = score_feasible(feasibility);
  }
  for (const BatchRow& row : out.rows) out.total += row.value();
  return out;
}

}  // namespace mcp
