#include "mcp/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "mcp/error.hpp"
#include "mcp/random.hpp"
#include "mcp/subdivision.hpp"
#include "mcp/triangulation.hpp"

namespace mcp {

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::TriangulateOnly: return "triangulate";
    case Strategy::Greedy: return "greedy";
    case Strategy::LocalSearch: return "local-search";
    case Strategy::Exact: return "exact";
  }
  return "local-search";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "triangulate" || name == "triangulate-only") return Strategy::TriangulateOnly;
  if (name == "greedy") return Strategy::Greedy;
  if (name == "local-search") return Strategy::LocalSearch;
  if (name == "exact") return Strategy::Exact;
  return std::nullopt;
}

bool better_solution(const EdgeSet& a, const EdgeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct BaseTriangulation {
  Subdivision tri;
  EdgeKeySet fixed;  // collinear chain constraints
};

BaseTriangulation build_base(const Instance& instance, SweepDirection direction, bool chains) {
  BaseTriangulation base{Subdivision::build_trusted(instance.points, sweep_triangulation(instance.points, direction)), {}};
  if (chains) {
    for (const auto& run : collinear_runs(instance)) {
      for (std::size_t i = 0; i + 1 < run.size(); ++i) {
        const Edge e = make_edge(run[i], run[i + 1]);
        if (insert_constraint(base.tri, e, base.fixed)) base.fixed.insert(edge_key(e.u, e.v));
      }
    }
  }
  lawson_flip(base.tri, base.fixed);
  return base;
}

SweepDirection random_direction(Rng& rng) {
  for (;;) {
    const Coord a = rng.between(-1024, 1024), b = rng.between(-1024, 1024);
    if (a != 0 || b != 0) return {a, b};
  }
}

// Greedy removal over priority tiers; each tier is shuffled, then optionally
// ordered by decreasing endpoint degree.
void reduce(Subdivision& sub, std::vector<std::vector<Edge>>& tiers, Rng& rng, RemovalOrder order) {
  for (auto& tier : tiers) {
    rng.shuffle(std::span<Edge>(tier));
    if (order == RemovalOrder::Degree) {
      std::stable_sort(tier.begin(), tier.end(), [&](const Edge& a, const Edge& b) {
        return sub.degree(a.u) + sub.degree(a.v) > sub.degree(b.u) + sub.degree(b.v);
      });
    }
  }
  bool removed = true;
  while (removed) {
    removed = false;
    for (const auto& tier : tiers) {
      for (const Edge& e : tier) {
        if (sub.contains(e) && sub.merge_preview(e) == MergeVerdict::Removable) {
          sub.remove_edge(e);
          removed = true;
        }
      }
    }
  }
}

// Chain edges of one orientation are offered for removal before the other, so
// whole rows or columns of cells can merge into strips.
std::size_t chain_tier(const Subdivision& sub, const Edge& e, bool vertical_first) {
  const bool vertical = sub.point(e.u).x == sub.point(e.v).x;
  return vertical == vertical_first ? 0 : 1;
}

std::vector<std::vector<Edge>> split_tiers(const Subdivision& sub, const EdgeKeySet& fixed, bool vertical_first) {
  std::vector<std::vector<Edge>> tiers(3);
  for (const Edge& e : sub.edges()) {
    if (sub.is_boundary_edge(e)) continue;
    tiers[fixed.contains(edge_key(e.u, e.v)) ? 1 + chain_tier(sub, e, vertical_first) : 0].push_back(e);
  }
  return tiers;
}

// One perturbation: re-triangulate every non-triangular face with a random
// sweep, apply random flips to the resulting triangulation, then reduce with
// the new edges first, the old partition edges next, and chain edges last.
Subdivision perturb(const Instance& instance, const Subdivision& current, const EdgeKeySet& fixed, std::size_t strength,
                    bool vertical_first, RemovalOrder order, Rng& rng) {
  EdgeSet edges = current.edges();
  std::unordered_set<std::uint64_t> partition;
  partition.reserve(edges.size() * 2);
  for (const Edge& e : edges) partition.insert(edge_key(e.u, e.v));

  std::vector<Point> face_points;
  for (Index f : current.live_faces()) {
    if (!current.face(f).bounded || current.face_size(f) <= 3) continue;
    face_points.clear();
    for (Index v : current.face_vertices(f)) face_points.push_back(current.point(v));
    for (const Edge& e : sweep_triangulation(face_points, random_direction(rng))) {
      if (!partition.contains(edge_key(e.u, e.v))) edges.push_back(e);
    }
  }
  Subdivision tri = Subdivision::build_trusted(instance.points, edges);

  std::vector<Edge> candidates;
  candidates.reserve(edges.size());
  for (const Edge& e : edges)
    if (!fixed.contains(edge_key(e.u, e.v))) candidates.push_back(e);
  for (std::size_t k = 0; k < strength && !candidates.empty(); ++k) {
    const std::size_t i = rng.below(candidates.size());
    if (!tri.contains(candidates[i])) continue;
    if (const auto flipped = tri.flip(candidates[i])) candidates[i] = *flipped;
  }

  std::vector<std::vector<Edge>> tiers(4);
  for (const Edge& e : tri.edges()) {
    if (tri.is_boundary_edge(e)) continue;
    const std::uint64_t key = edge_key(e.u, e.v);
    tiers[fixed.contains(key) ? 2 + chain_tier(tri, e, vertical_first) : (partition.contains(key) ? 1 : 0)].push_back(e);
  }
  reduce(tri, tiers, rng, order);
  return tri;
}

struct Incumbent {
  EdgeSet solution;
  std::size_t faces = 0;
  bool set = false;
  double found_at = 0.0;
  std::vector<std::pair<double, std::size_t>> trace;
};

}  // namespace

EdgeSet triangulate(const Instance& instance) { return sweep_triangulation(instance.points); }

EdgeSet delaunay_triangulate(const Instance& instance) { return build_base(instance, {}, false).tri.edges(); }

EdgeSet collinear_seed(const Instance& instance) { return build_base(instance, {}, true).tri.edges(); }

EdgeSet greedy_reduce(const Instance& instance, std::span<const Edge> start, std::uint64_t seed, RemovalOrder order) {
  const FeasibilityReport report = verify(instance, start);
  if (!report.feasible) throw Error(ErrorKind::InfeasibleSolution, "greedy_reduce needs a feasible start");
  Subdivision sub = Subdivision::build_trusted(instance.points, start);
  Rng rng(seed);
  std::vector<std::vector<Edge>> tiers = split_tiers(sub, {}, true);
  reduce(sub, tiers, rng, order);
  return sub.edges();
}

SolveResult local_search(const Instance& instance, const SolverConfig& config) {
  if (!(config.time_limit > 0)) throw Error(ErrorKind::InvalidArgument, "time_limit must be positive");
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.time_limit));
  const std::size_t strength =
      config.perturbation_strength.value_or(std::max<std::size_t>(1, instance.size() / 20));
  const std::size_t restarts = std::max<std::size_t>(1, config.restarts);
  const int workers = std::max(1, config.workers);

  Incumbent best;
  std::size_t iterations = 0;

  auto offer = [&](const Subdivision& sub) {
    const std::size_t faces = sub.counts().f;
#pragma omp critical(mcp_incumbent)
    {
      if (!best.set || faces <= best.faces) {
        EdgeSet candidate = sub.edges();
        if (!best.set || faces < best.faces || better_solution(candidate, best.solution)) {
          const bool improved = !best.set || faces < best.faces;
          best.solution = std::move(candidate);
          best.faces = faces;
          best.set = true;
          if (improved) {
            best.found_at = seconds_since(start);
            best.trace.emplace_back(best.found_at, faces);
          }
        }
      }
    }
  };

  // Restart r draws from its own stream (seed, r), so the outcome does not
  // depend on which worker runs it.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) reduction(+ : iterations)
  for (std::size_t r = 0; r < restarts; ++r) {
    const auto began = Clock::now();
    if (r > 0 && began >= deadline) continue;
    // Equal share of the time left; unused time carries over.
    const auto share = (deadline - began) * workers / std::int64_t(restarts - r);
    const auto restart_deadline = std::min(deadline, began + share);
    Rng rng(Rng::derive(config.seed, r));
    // Even restarts sweep along an axis, which suits grid-aligned point sets;
    // restart 0 is exactly greedy_reduce(triangulate(instance), seed). Odd
    // restarts start from the Delaunay triangulation constrained to chains.
    const bool vertical_first = (r / 2) % 2 == 0;
    EdgeKeySet fixed;
    Subdivision current = [&] {
      if (r % 2 == 0) {
        const SweepDirection axis = vertical_first ? SweepDirection{1, 0} : SweepDirection{0, 1};
        return Subdivision::build_trusted(instance.points, sweep_triangulation(instance.points, axis));
      }
      BaseTriangulation base = build_base(instance, random_direction(rng), true);
      fixed = std::move(base.fixed);
      return std::move(base.tri);
    }();
    Rng greedy_rng(r == 0 ? config.seed : rng.next());
    std::vector<std::vector<Edge>> tiers = split_tiers(current, fixed, vertical_first);
    reduce(current, tiers, greedy_rng, config.order);
    ++iterations;
    offer(current);

    std::size_t best_faces = current.counts().f;
    std::size_t stagnant = 0;
    while (stagnant < config.passes_per_restart && Clock::now() < restart_deadline) {
      Subdivision candidate = perturb(instance, current, fixed, strength, vertical_first, config.order, rng);
      ++iterations;
      const std::size_t faces = candidate.counts().f;
      if (faces < best_faces) {
        best_faces = faces;
        stagnant = 0;
        offer(candidate);
      } else {
        ++stagnant;
      }
      if (faces <= current.counts().f) current = std::move(candidate);
    }
  }

  SolveResult result;
  result.solution = std::move(best.solution);
  result.score_report = score(instance, result.solution);
  result.iterations = iterations;
  result.best_found_at = best.found_at;
  result.trace = std::move(best.trace);
  result.wall_time = seconds_since(start);
  return result;
}

SolveResult solve(const Instance& instance, const SolverConfig& config) {
  switch (config.strategy) {
    case Strategy::TriangulateOnly: {
      const auto start = Clock::now();
      SolveResult result;
      result.solution = canonical(triangulate(instance));
      result.score_report = score(instance, result.solution);
      result.iterations = 1;
      result.wall_time = seconds_since(start);
      result.best_found_at = result.wall_time;
      result.trace = {{result.wall_time, result.score_report.f}};
      return result;
    }
    case Strategy::Greedy: {
      SolverConfig greedy = config;
      greedy.restarts = 1;
      greedy.passes_per_restart = 0;
      return local_search(instance, greedy);
    }
    case Strategy::LocalSearch: return local_search(instance, config);
    case Strategy::Exact: return exact_oracle(instance, config.exact_limit);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown strategy");
}

}  // namespace mcp
