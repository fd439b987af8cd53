#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcp/edge.hpp"
#include "mcp/instance.hpp"
#include "mcp/io.hpp"

namespace mcp {

using Rational = boost::multiprecision::cpp_rational;

enum class ViolationKind {
  BadIndex,
  DuplicateEdge,
  PointOnEdge,
  CrossingEdges,
  IsolatedPoint,
  PointInFace,
  MissingHullEdge,
  Disconnected,
  NonConvexFace,
  EulerMismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Index> indices;  // offending point indices
  std::string detail;
};

struct FeasibilityReport {
  bool feasible = false;
  std::vector<Violation> violations;
  std::size_t n = 0, c = 0, m = 0, f = 0;

  bool has(ViolationKind kind) const;
};

struct ScoreReport {
  std::size_t n = 0, c = 0, m = 0, f = 0;
  std::size_t s = 0;            // edges removed relative to a triangulation
  std::size_t denominator = 0;  // 3(n-1) - c

  Rational score() const { return Rational(s) / Rational(denominator); }
  /// Unreduced "s/denominator".
  std::string fraction() const { return std::to_string(s) + "/" + std::to_string(denominator); }
  std::string decimal() const;
};

/// Decimal rendering with `digits` fractional digits, rounding half to even.
std::string to_decimal(const Rational& value, int digits = 9);

/// Triangulation edge count 3(n-1) - c.
inline std::size_t triangulation_edges(std::size_t n, std::size_t c) { return 3 * (n - 1) - c; }
/// Triangulation bounded-face count 2n - 2 - c.
inline std::size_t triangulation_faces(std::size_t n, std::size_t c) { return 2 * n - 2 - c; }

/// Runs the feasibility stages in order, stopping after the first stage whose
/// failure leaves no well-defined subdivision (bad indices, duplicates,
/// crossings, points on edges). Never throws for any edge list.
FeasibilityReport verify(const Instance& instance, std::span<const Edge> edges);

/// Requires a feasible solution; throws Error(InfeasibleSolution) otherwise.
ScoreReport score(const Instance& instance, std::span<const Edge> edges);

struct BatchRow {
  enum class Status { Scored, Missing, Infeasible };
  std::string name;
  Status status = Status::Missing;
  std::optional<ScoreReport> report;

  Rational value() const { return report ? report->score() : Rational(0); }
};

struct BatchReport {
  std::vector<BatchRow> rows;  // one per instance, in input order
  Rational total;
};

/// Missing or infeasible entries score 0; the total is the exact sum.
/// Instances are evaluated concurrently; the result does not depend on scheduling.
BatchReport batch_score(std::span<const Instance> instances, std::span<const Solution> solutions, int threads = 0);

}  // namespace mcp
