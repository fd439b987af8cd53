#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>

#include "mcp/conflicts.hpp"
#include "mcp/instance.hpp"
#include "mcp/solver.hpp"

namespace {

struct Fixture {
  mcp::Instance instance;
  mcp::EdgeSet edges;
};

const Fixture& fixture(std::size_t n) {
  static std::map<std::size_t, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    mcp::Instance instance = mcp::gen_uniform(n, 1'000'000, 7);
    mcp::EdgeSet edges = mcp::triangulate(instance);
    it = cache.emplace(n, Fixture{std::move(instance), std::move(edges)}).first;
  }
  return it->second;
}

void BM_ConflictsSerial(benchmark::State& state) {
  const Fixture& f = fixture(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mcp::find_conflicts_serial(f.instance.points, f.edges));
  state.SetComplexityN(state.range(0));
}

void BM_ConflictsGrid(benchmark::State& state) {
  const Fixture& f = fixture(std::size_t(state.range(0)));
  const int threads = int(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mcp::find_conflicts(f.instance.points, f.edges, threads));
  state.SetComplexityN(state.range(0));
}

void grid_args(benchmark::internal::Benchmark* b) {
  for (long n : {1'000L, 10'000L, 100'000L}) {
    b->Args({n, 1});
    if (omp_get_max_threads() > 1) b->Args({n, omp_get_max_threads()});
  }
}

}  // namespace

BENCHMARK(BM_ConflictsSerial)->Arg(1'000)->Arg(4'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConflictsGrid)->Apply(grid_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
