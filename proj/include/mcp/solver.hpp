#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mcp/edge.hpp"
#include "mcp/instance.hpp"
#include "mcp/verify.hpp"

namespace mcp {

enum class Strategy { TriangulateOnly, Greedy, LocalSearch, Exact };
enum class RemovalOrder { Random, Degree };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view name);

inline constexpr std::size_t kDefaultExactLimit = 7;

struct SolverConfig {
  std::uint64_t seed = 0;
  double time_limit = 10.0;  // seconds
  std::size_t restarts = 4;
  /// Stagnant perturbation passes before a restart; 0 stops each restart at
  /// its first greedy fixpoint.
  std::size_t passes_per_restart = 50;
  /// Random flips per perturbation; unset means n / 20 (at least 1).
  std::optional<std::size_t> perturbation_strength;
  Strategy strategy = Strategy::LocalSearch;
  RemovalOrder order = RemovalOrder::Random;
  int workers = 1;
  std::size_t exact_limit = kDefaultExactLimit;
};

struct SolveResult {
  EdgeSet solution;  // canonical
  ScoreReport score_report;
  std::size_t iterations = 0;
  double wall_time = 0.0;
  double best_found_at = 0.0;
  /// (seconds, bounded faces) each time the best solution improved.
  std::vector<std::pair<double, std::size_t>> trace;
};

/// Lexicographic sweep triangulation; m = 3(n-1) - c and f = 2n - 2 - c.
EdgeSet triangulate(const Instance& instance);

/// Sweep triangulation improved to Delaunay by Lawson flips.
EdgeSet delaunay_triangulate(const Instance& instance);

/// Constrained Delaunay triangulation whose constraints chain the horizontal
/// and vertical collinear runs; equals delaunay_triangulate without such runs.
EdgeSet collinear_seed(const Instance& instance);

/// Removes non-hull edges in a seed-determined random order while each removal
/// keeps every face convex, until a full pass removes nothing.
/// Throws Error(InfeasibleSolution) if `start` is not feasible.
EdgeSet greedy_reduce(const Instance& instance, std::span<const Edge> start, std::uint64_t seed,
                      RemovalOrder order = RemovalOrder::Random);

/// Anytime randomized local search; see SolverConfig. Throws Error(DegenerateHull).
SolveResult local_search(const Instance& instance, const SolverConfig& config);

/// Provably optimal by exhaustive enumeration of triangulations and their
/// feasible edge-removal subsets. Throws Error(TooLarge) if n > limit.
SolveResult exact_oracle(const Instance& instance, std::size_t limit = kDefaultExactLimit);

/// Dispatches on config.strategy.
SolveResult solve(const Instance& instance, const SolverConfig& config);

/// Tie-break between equally scored solutions: fewer edges, then the
/// lexicographically smaller canonical edge list.
bool better_solution(const EdgeSet& a, const EdgeSet& b);

}  // namespace mcp
