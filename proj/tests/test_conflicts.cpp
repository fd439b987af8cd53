#include <doctest.h>

#include "mcp/conflicts.hpp"
#include "mcp/instance.hpp"
#include "mcp/random.hpp"
#include "mcp/solver.hpp"

using namespace mcp;

namespace {

EdgeSet random_segments(std::size_t n, std::size_t m, Rng& rng) {
  EdgeSet edges;
  while (edges.size() < m) {
    const Index a = Index(rng.below(n)), b = Index(rng.below(n));
    if (a != b) edges.push_back(make_edge(a, b));
  }
  return edges;
}

}  // namespace

TEST_CASE("grid kernel matches the serial reference on random segment soups") {
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 5 + rng.below(300);
    const Coord bound = t % 2 ? 20 : 100000;
    const Instance instance = t % 3 == 0 ? gen_ortho_collinear(std::min<std::size_t>(n, 36), 6, bound, t)
                                         : gen_uniform(n, bound, std::uint64_t(t));
    const EdgeSet edges = random_segments(instance.size(), 1 + rng.below(3 * instance.size()), rng);
    const auto serial = find_conflicts_serial(instance.points, edges);
    CHECK(find_conflicts(instance.points, edges, 1) == serial);
    CHECK(find_conflicts(instance.points, edges, 3) == serial);
  }
}

TEST_CASE("triangulations have no conflicts") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance instance = gen_uniform(3000, 1'000'000, seed);
    const EdgeSet edges = triangulate(instance);
    CHECK(find_conflicts(instance.points, edges).empty());
  }
}

TEST_CASE("conflict kinds and positions") {
  const Instance instance = make_instance("t", Family::External, {{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 0}});
  const EdgeSet edges{{0, 2}, {1, 3}, {0, 1}};
  const auto found = find_conflicts(instance.points, edges);
  REQUIRE(found.size() == 2);
  CHECK(found[0].kind == Conflict::Kind::Crossing);
  CHECK(found[0].first == 0);
  CHECK(found[0].second == 1);
  CHECK(found[1].kind == Conflict::Kind::PointOnEdge);
  CHECK(found[1].first == 4);
  CHECK(found[1].second == 2);
  CHECK(find_conflicts_serial(instance.points, edges) == found);
}

TEST_CASE("collinear overlap is a crossing") {
  const Instance instance = make_instance("t", Family::External, {{0, 0}, {4, 4}, {2, 2}, {8, 8}, {0, 8}});
  const EdgeSet edges{{0, 1}, {2, 3}};
  const auto found = find_conflicts(instance.points, edges);
  bool crossing = false;
  for (const auto& c : found) crossing |= c.kind == Conflict::Kind::Crossing;
  CHECK(crossing);
  CHECK(find_conflicts_serial(instance.points, edges) == found);
}
