#include <chrono>
#include <deque>
#include <set>

#include "mcp/error.hpp"
#include "mcp/solver.hpp"
#include "mcp/subdivision.hpp"

namespace mcp {

namespace {

struct Best {
  EdgeSet edges;
  bool set = false;
};

// Any feasible removal set of a triangulation stays feasible when shrunk, so
// deciding edges in a fixed order and only removing currently removable ones
// visits every feasible subset.
void enumerate_removals(Subdivision& sub, const std::vector<Edge>& interior, std::size_t i, Best& best) {
  if (i == interior.size()) {
    EdgeSet edges = sub.edges();
    if (!best.set || better_solution(edges, best.edges)) {
      best.edges = std::move(edges);
      best.set = true;
    }
    return;
  }
  enumerate_removals(sub, interior, i + 1, best);
  if (sub.merge_preview(interior[i]) == MergeVerdict::Removable) {
    Subdivision reduced = sub;
    reduced.remove_edge(interior[i]);
    enumerate_removals(reduced, interior, i + 1, best);
  }
}

}  // namespace

SolveResult exact_oracle(const Instance& instance, std::size_t limit) {
  if (instance.size() > limit)
    throw Error(ErrorKind::TooLarge,
                "exact oracle limited to n <= " + std::to_string(limit) + ", got " + std::to_string(instance.size()));
  const auto start = std::chrono::steady_clock::now();

  std::set<EdgeSet> seen;
  std::deque<EdgeSet> queue;
  EdgeSet first = canonical(triangulate(instance));
  seen.insert(first);
  queue.push_back(std::move(first));

  Best best;
  while (!queue.empty()) {
    const EdgeSet tri_edges = std::move(queue.front());
    queue.pop_front();
    Subdivision tri = Subdivision::build_trusted(instance.points, tri_edges);

    std::vector<Edge> interior;
    for (const Edge& e : tri_edges)
      if (!tri.is_boundary_edge(e)) interior.push_back(e);

    for (const Edge& e : interior) {
      Subdivision flipped = tri;
      if (!flipped.flip(e)) continue;
      EdgeSet next = flipped.edges();
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }

    Subdivision work = tri;
    enumerate_removals(work, interior, 0, best);
  }

  SolveResult result;
  result.solution = std::move(best.edges);
  result.score_report = score(instance, result.solution);
  result.iterations = seen.size();
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.best_found_at = result.wall_time;
  result.trace = {{result.wall_time, result.score_report.f}};
  return result;
}

}  // namespace mcp
