// Acceptance suite: one PASS/FAIL line per criterion. Thresholds are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "mcp/cli.hpp"
#include "mcp/density.hpp"
#include "mcp/io.hpp"
#include "mcp/random.hpp"
#include "mcp/solver.hpp"
#include "mcp/subdivision.hpp"
#include "mcp/verify.hpp"
#include "oracle.hpp"

using namespace mcp;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kIdentityBudget = 60.0;
constexpr std::size_t kOracleCorpus = 50;
constexpr std::size_t kOracleLocalMatches = 45;
constexpr double kOracleBudget = 600.0;
constexpr std::size_t kMutations = 1000;
constexpr double kMutationFlagRate = 0.99;
constexpr std::size_t kFuzzInstances = 500;
constexpr std::size_t kFuzzMaxN = 10'000;
constexpr double kFloorUniform = 0.15;
constexpr double kFloorOrtho = 0.30;
constexpr double kFloorBudget = 300.0;
constexpr double kFloorTimeLimit = 60.0;

int failures = 0;

void report(bool pass, const std::string& name, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += !pass;
}

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

const char* family_name(int k) {
  static const char* names[] = {"uniform", "edge", "illumination", "ortho-collinear"};
  return names[k % 4];
}

// Instance of family k % 4 with about n points; small bounds on some draws make collinear points common.
Instance generate(int family, std::size_t n, std::uint64_t seed) {
  switch (family % 4) {
    case 0: {
      const Coord bound = seed % 3 == 0 ? Coord(std::ceil(2 * std::sqrt(double(n)))) + 2 : 1'000'000;
      return gen_uniform(n, bound, seed);
    }
    case 1: return gen_density(n, gradient_map(synthetic_brightness(64, 64, seed)), 100, seed, Family::Edge);
    case 2: return gen_density(n, synthetic_brightness(64, 64, seed), 100, seed, Family::Illumination);
    default: {
      const std::size_t lines = std::size_t(std::ceil(std::sqrt(double(n)))) + 1 + seed % 7;
      return gen_ortho_collinear(n, lines, 100'000, seed);
    }
  }
}

Instance generate_tiny(std::size_t k, std::uint64_t seed) {
  const std::size_t n = 3 + k % 4;
  switch (k % 5) {
    case 0: return gen_uniform(n, 1000, seed);
    case 1: return gen_uniform(n, 4, seed);
    case 2: return gen_ortho_collinear(n, 3, 50, seed);
    case 3: return gen_density(n, synthetic_brightness(4, 4, seed), 3, seed);
    default: return gen_density(n, gradient_map(synthetic_brightness(4, 4, seed)), 3, seed, Family::Edge);
  }
}

void triangulation_identity() {
  const auto start = Clock::now();
  std::size_t exact = 0, total = 0;
  for (int family = 0; family < 4; ++family) {
    for (std::size_t k = 0; k < 50; ++k) {
      const std::size_t n = 10 + (1990 * k) / 49;
      const Instance instance = generate(family, n, 1000 * std::uint64_t(family) + k);
      const EdgeSet edges = triangulate(instance);
      const FeasibilityReport report = verify(instance, edges);
      const std::size_t c = oracle::hull_boundary_count(fixtures::to_oracle(instance));
      ++total;
      exact += report.feasible && report.c == c && edges.size() == 3 * (n - 1) - c && report.f == 2 * n - 2 - c;
    }
  }
  const double elapsed = since(start);
  report(exact == total && total == 200 && elapsed < kIdentityBudget, "Triangulation identity",
         std::to_string(exact) + "/" + std::to_string(total) + " exact, " + fmt_seconds(elapsed) + " (limit 60 s)");
}

void score_axioms() {
  Rng rng(77);
  std::size_t instances = 0, steps = 0, bad = 0;
  for (int family = 0; family < 4; ++family) {
    for (std::size_t k = 0; k < 10; ++k) {
      const std::size_t n = 10 + 40 * k;
      const Instance instance = generate(family, n, 500 + k);
      ++instances;
      Subdivision sub = Subdivision::build(instance.points, triangulate(instance));
      const ScoreReport base = score(instance, sub.edges());
      bad += base.score() != 0;
      const Rational step = Rational(1) / Rational(3 * (n - 1) - base.c);
      Rational previous = base.score();
      std::vector<Edge> order = sub.edges();
      rng.shuffle(std::span<Edge>(order));
      std::size_t checked = 0;
      for (const Edge& e : order) {
        if (sub.merge_preview(e) != MergeVerdict::Removable) continue;
        sub.remove_edge(e);
        if (checked++ >= 40) continue;
        const Rational now = score(instance, sub.edges()).score();
        ++steps;
        bad += now - previous != step;
        bad += !(now >= 0 && now < 1);
        previous = now;
      }
      const Rational last = score(instance, sub.edges()).score();
      bad += !(last >= 0 && last < 1);
    }
  }
  report(bad == 0, "Score axioms",
         std::to_string(instances) + " triangulations score 0, " + std::to_string(steps) + " removals each +1/(3(n-1)-c), " +
             std::to_string(bad) + " violations");
}

void oracle_equivalence() {
  const auto start = Clock::now();
  std::size_t agree = 0, matched = 0;
  for (std::size_t k = 0; k < kOracleCorpus; ++k) {
    const Instance instance = generate_tiny(k, 9000 + k);
    const SolveResult exact = exact_oracle(instance);
    const oracle::Optimum brute = oracle::brute_force(fixtures::to_oracle(instance));
    agree += exact.score_report.f == brute.faces && verify(instance, exact.solution).feasible;
    SolverConfig config;
    config.seed = k;
    config.restarts = 100;
    config.passes_per_restart = 10;
    config.time_limit = 60;
    const SolveResult local = local_search(instance, config);
    matched += local.score_report.f == exact.score_report.f;
  }
  const double elapsed = since(start);
  report(agree == kOracleCorpus && matched >= kOracleLocalMatches && elapsed < kOracleBudget, "Oracle equivalence",
         "exact = brute force on " + std::to_string(agree) + "/50, local search (100 restarts) optimal on " +
             std::to_string(matched) + "/50 (need 45), " + fmt_seconds(elapsed));
}

EdgeSet mutate(const Instance& instance, const EdgeSet& base, std::size_t kind, Rng& rng) {
  EdgeSet edges = base;
  const Index n = Index(instance.size());
  const std::size_t i = rng.below(edges.size());
  switch (kind % 4) {
    case 0: {  // move one endpoint
      Index w = Index(rng.below(std::uint64_t(n)));
      while (w == edges[i].u || w == edges[i].v) w = Index(rng.below(std::uint64_t(n)));
      edges[i] = make_edge(edges[i].u, w);
      break;
    }
    case 1: edges.erase(edges.begin() + std::ptrdiff_t(i)); break;  // delete
    default: {  // add an absent segment
      for (;;) {
        const Index a = Index(rng.below(std::uint64_t(n))), b = Index(rng.below(std::uint64_t(n)));
        if (a == b) continue;
        const Edge e = make_edge(a, b);
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        edges.push_back(e);
        break;
      }
    }
  }
  return edges;
}

void verifier_soundness() {
  Rng rng(5150);
  std::vector<Instance> corpus;
  std::vector<EdgeSet> solutions;
  std::vector<Rational> scores;
  for (std::size_t k = 0; k < 50; ++k) {
    corpus.push_back(generate(int(k), 10 + 6 * k, 7000 + k));
    SolverConfig config;
    config.seed = k;
    config.passes_per_restart = 3;
    config.time_limit = 5;
    solutions.push_back(local_search(corpus.back(), config).solution);
    scores.push_back(score(corpus.back(), solutions.back()).score());
  }

  std::size_t flagged = 0, agree = 0;
  for (std::size_t t = 0; t < kMutations; ++t) {
    const std::size_t j = rng.below(corpus.size());
    const EdgeSet mutated = mutate(corpus[j], solutions[j], t, rng);
    const FeasibilityReport report = verify(corpus[j], mutated);
    flagged += !report.feasible || score(corpus[j], mutated).score() != scores[j];
    agree += report.feasible == oracle::feasible(fixtures::to_oracle(corpus[j]), fixtures::to_oracle(mutated));
  }

  std::size_t accepted = 0;
  for (std::size_t k = 0; k < kFuzzInstances; ++k) {
    const double u = double(rng.below(1'000'000)) / 1e6;
    const std::size_t n = std::min(kFuzzMaxN, std::size_t(std::llround(std::pow(10.0, 1.0 + 3.0 * u))));
    const Instance instance = generate(int(k), k == 0 ? kFuzzMaxN : n, 20'000 + k);
    SolverConfig config;
    config.seed = k;
    config.passes_per_restart = 2;
    config.time_limit = 0.5;
    config.strategy = k % 3 == 0 ? Strategy::TriangulateOnly : (k % 3 == 1 ? Strategy::Greedy : Strategy::LocalSearch);
    accepted += verify(instance, solve(instance, config).solution).feasible;
  }

  const double rate = double(flagged) / double(kMutations);
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "%zu/%zu mutations flagged (%.1f%%, need 99%%), independent checker agrees on %zu/%zu, "
                "%zu/%zu solver outputs accepted",
                flagged, kMutations, 100 * rate, agree, kMutations, accepted, kFuzzInstances);
  report(rate >= kMutationFlagRate && agree == kMutations && accepted == kFuzzInstances, "Verifier soundness", detail);
}

void performance_floor() {
  SolverConfig config;
  config.seed = 1;
  config.time_limit = kFloorTimeLimit;
  config.passes_per_restart = 1'000'000;

  const auto t0 = Clock::now();
  const Instance uniform = gen_uniform(10'000, 1'000'000, 1);
  const SolveResult u = local_search(uniform, config);
  const double tu = since(t0);
  const auto t1 = Clock::now();
  const Instance ortho = gen_ortho_collinear(10'000, 100, 1'000'000, 1);
  const SolveResult o = local_search(ortho, config);
  const double to = since(t1);

  const bool ok_u = verify(uniform, u.solution).feasible && u.score_report.score() >= Rational(15, 100) && tu <= kFloorBudget;
  const bool ok_o = verify(ortho, o.solution).feasible && o.score_report.score() >= Rational(30, 100) && to <= kFloorBudget;
  char detail[256];
  std::snprintf(detail, sizeof detail, "uniform n=10000 %s in %s (need %.2f), ortho n=10000 g=100 %s in %s (need %.2f)",
                u.score_report.decimal().c_str(), fmt_seconds(tu).c_str(), kFloorUniform, o.score_report.decimal().c_str(),
                fmt_seconds(to).c_str(), kFloorOrtho);
  report(ok_u && ok_o, "Performance floor", detail);
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

void determinism() {
  const fs::path dir = fs::temp_directory_path() / "mcp-acceptance-determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  bool ok = true;
  std::size_t compared = 0;
  for (int k = 0; k < 4; ++k) {
    for (const char* name : {"a.json", "b.json"})
      ok &= cli({"gen", "--family", family_name(k), "--n", "2000", "--seed", "31", "--out", (dir / name).string()}) == 0;
    ok &= read_file(dir / "a.json") == read_file(dir / "b.json");
    ++compared;

    for (const char* name : {"sa.json", "sb.json"})
      ok &= cli({"solve", "--in", (dir / "a.json").string(), "--out", (dir / name).string(), "--seed", "5", "--workers",
                 "1", "--restarts", "2", "--passes", "10", "--time-limit", "600"}) == 0;
    ok &= read_file(dir / "sa.json") == read_file(dir / "sb.json");
    ++compared;
  }
  report(ok, "Determinism",
         std::to_string(compared) + " file pairs (4 families generated, 4 solutions) " + (ok ? "byte-identical" : "differ"));
}

void known_values() {
  struct Toy {
    Instance instance;
    Rational expected;
  };
  const std::vector<Toy> toys{{fixtures::square(), Rational(1, 5)},
                              {fixtures::square_center(), Rational(1, 4)},
                              {fixtures::square_offcenter(), Rational(1, 8)},
                              {fixtures::triangle_interior(), Rational(0)}};
  bool ok = true;
  std::string detail;
  for (const Toy& toy : toys) {
    const SolveResult exact = exact_oracle(toy.instance);
    const std::size_t brute = oracle::brute_force(fixtures::to_oracle(toy.instance)).faces;
    SolverConfig config;
    config.restarts = 10;
    const SolveResult local = local_search(toy.instance, config);
    const bool good = exact.score_report.score() == toy.expected && exact.score_report.f == brute &&
                      local.score_report.score() == toy.expected;
    ok &= good;
    detail += (detail.empty() ? "" : ", ") + toy.instance.name + " " + exact.score_report.fraction() + (good ? "" : " (mismatch)");
  }
  report(ok, "Known-value toys", detail);
}

}  // namespace

int main() {
  triangulation_identity();
  score_axioms();
  oracle_equivalence();
  verifier_soundness();
  performance_floor();
  determinism();
  known_values();
  return failures == 0 ? 0 : 1;
}
