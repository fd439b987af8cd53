#include "mcp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "mcp/density.hpp"
#include "mcp/error.hpp"
#include "mcp/instance.hpp"
#include "mcp/io.hpp"
#include "mcp/render.hpp"
#include "mcp/solver.hpp"
#include "mcp/verify.hpp"

namespace mcp::cli {

namespace fs = std::filesystem;

namespace {

constexpr Coord kDefaultBound = 1'000'000;
constexpr std::uint32_t kSyntheticMapSize = 64;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
  Coord bound = kDefaultBound;
  std::size_t grid_lines = 0;
  std::string map;
  Coord scale = 1000;
  std::string name;
};

struct SolveOptions {
  std::string in, out;
  std::string strategy = "local-search";
  std::string order = "random";
  std::uint64_t seed = 0;
  double time_limit = 10.0;
  int workers = 1;
  std::size_t restarts = SolverConfig{}.restarts;
  std::size_t passes = SolverConfig{}.passes_per_restart;
  std::optional<std::size_t> perturbation;
  std::size_t exact_limit = kDefaultExactLimit;
};

struct PairOptions {
  std::string in, solution, out;
};

struct BenchOptions {
  std::string dir, out;
  bool timing = false;
};

int usage(Streams io, const std::string& message) {
  io.err << "error: " << message << "\n";
  return kUsage;
}

SolverConfig make_config(const SolveOptions& o) {
  SolverConfig config;
  config.seed = o.seed;
  config.time_limit = o.time_limit;
  config.workers = o.workers;
  config.restarts = o.restarts;
  config.passes_per_restart = o.passes;
  config.perturbation_strength = o.perturbation;
  config.exact_limit = o.exact_limit;
  config.strategy = *parse_strategy(o.strategy);
  config.order = o.order == "degree" ? RemovalOrder::Degree : RemovalOrder::Random;
  return config;
}

void print_score(std::ostream& out, const ScoreReport& r) {
  out << "n=" << r.n << " c=" << r.c << " m=" << r.m << " f=" << r.f << "\n";
  out << r.fraction() << " = " << r.decimal() << "\n";
}

int cmd_gen(const GenOptions& o, Streams io) {
  const auto family = parse_family(o.family);
  if (!family || *family == Family::External) return usage(io, "unknown family '" + o.family + "'");
  if (o.n < 3) return usage(io, "--n must be at least 3");
  Instance instance;
  try {
    switch (*family) {
      case Family::Uniform: instance = gen_uniform(o.n, o.bound, o.seed); break;
      case Family::OrthoCollinear: {
        const std::size_t lines = o.grid_lines ? o.grid_lines : std::max<std::size_t>(2, o.n / 10);
        instance = gen_ortho_collinear(o.n, lines, o.bound, o.seed);
        break;
      }
      default: {
        DensityMap map;
        try {
          map = o.map.empty() ? synthetic_brightness(kSyntheticMapSize, kSyntheticMapSize, o.seed) : load_density(o.map);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::EmptyMap) throw;
          return usage(io, e.what());
        }
        if (*family == Family::Edge) map = gradient_map(map);
        instance = gen_density(o.n, map, o.scale, o.seed, *family);
      }
    }
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::TooDense:
      case ErrorKind::EmptyMap:
      case ErrorKind::DegenerateHull:
      case ErrorKind::SchemaError: return kGenerationFailed;
      default: return kUsage;
    }
  }
  if (!o.name.empty()) instance.name = o.name;
  try {
    save_instance(instance, o.out);
  } catch (const Error& e) {
    return usage(io, e.what());
  }
  io.out << "wrote " << instance.points.size() << " points to " << o.out << "\n";
  return kOk;
}

int cmd_solve(const SolveOptions& o, Streams io) {
  if (!(o.time_limit > 0)) return usage(io, "--time-limit must be positive");
  if (!parse_strategy(o.strategy)) return usage(io, "unknown strategy '" + o.strategy + "'");
  if (o.workers < 1) return usage(io, "--workers must be at least 1");
  Instance instance;
  try {
    instance = load_instance(o.in);
  } catch (const Error& e) {
    return usage(io, e.what());
  }
  SolveResult result;
  try {
    result = solve(instance, make_config(o));
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge || e.kind() == ErrorKind::InvalidArgument ? kUsage : kSolverFailed;
  }
  if (!verify(instance, result.solution).feasible) {
    io.err << "error: solver produced an infeasible solution\n";
    return kSolverFailed;
  }
  try {
    save_solution({instance.name, result.solution}, o.out);
  } catch (const Error& e) {
    return usage(io, e.what());
  }
  print_score(io.out, result.score_report);
  io.out << "iterations=" << result.iterations << "\n";
  return kOk;
}

// Loads an instance and a solution that refers to it; returns an exit code on failure.
std::optional<int> load_pair(const PairOptions& o, Streams io, Instance& instance, Solution& solution) {
  try {
    instance = load_instance(o.in);
    solution = load_solution(o.solution);
    check_against(solution, instance);
  } catch (const Error& e) {
    return usage(io, e.what());
  }
  return std::nullopt;
}

void print_violations(std::ostream& out, const FeasibilityReport& report) {
  for (const Violation& v : report.violations) {
    out << to_string(v.kind);
    for (Index i : v.indices) out << ' ' << i;
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
  }
}

int cmd_verify(const PairOptions& o, Streams io) {
  Instance instance;
  Solution solution;
  if (auto code = load_pair(o, io, instance, solution)) return *code;
  const FeasibilityReport report = verify(instance, solution.edges);
  if (report.feasible) {
    io.out << "feasible n=" << report.n << " c=" << report.c << " m=" << report.m << " f=" << report.f << "\n";
    return kOk;
  }
  io.out << "infeasible\n";
  print_violations(io.out, report);
  return kInfeasible;
}

int cmd_score(const PairOptions& o, Streams io) {
  Instance instance;
  Solution solution;
  if (auto code = load_pair(o, io, instance, solution)) return *code;
  const FeasibilityReport report = verify(instance, solution.edges);
  if (!report.feasible) {
    io.out << "0 (infeasible)\n";
    print_violations(io.err, report);
    return kInfeasible;
  }
  const ScoreReport s = score(instance, solution.edges);
  io.out << s.fraction() << " = " << s.decimal() << "\n";
  return kOk;
}

int cmd_render(const PairOptions& o, Streams io) {
  Instance instance;
  Solution solution;
  if (auto code = load_pair(o, io, instance, solution)) return *code;
  const FeasibilityReport report = verify(instance, solution.edges);
  try {
    write_file(o.out, render_svg(instance, solution.edges, report));
  } catch (const Error& e) {
    return usage(io, e.what());
  }
  if (!report.feasible) {
    print_violations(io.err, report);
    return kInfeasible;
  }
  return kOk;
}

int cmd_bench(const BenchOptions& b, const SolveOptions& o, Streams io) {
  if (!(o.time_limit > 0)) return usage(io, "--time-limit must be positive");
  if (!parse_strategy(o.strategy)) return usage(io, "unknown strategy '" + o.strategy + "'");
  std::error_code ec;
  if (!fs::is_directory(b.dir, ec)) return usage(io, "not a directory: " + b.dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(b.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) return usage(io, "no instance files in " + b.dir);

  std::vector<Instance> instances;
  for (const auto& path : files) {
    try {
      instances.push_back(load_instance(path));
    } catch (const Error& e) {
      return usage(io, path.string() + ": " + e.what());
    }
  }

  const SolverConfig config = make_config(o);
  nlohmann::json rows = nlohmann::json::array();
  Rational total = 0;
  for (const Instance& instance : instances) {
    SolveResult result;
    try {
      result = solve(instance, config);
    } catch (const Error& e) {
      io.err << "error: " << instance.name << ": " << e.what() << "\n";
      return e.kind() == ErrorKind::TooLarge ? kUsage : kSolverFailed;
    }
    const ScoreReport& r = result.score_report;
    total += r.score();
    nlohmann::json row = {{"name", instance.name}, {"n", r.n}, {"c", r.c}, {"m", r.m}, {"f", r.f},
                          {"s", r.s}, {"score", r.fraction()}, {"decimal", r.decimal()}};
    if (b.timing) row["wall_time"] = result.wall_time;
    rows.push_back(std::move(row));
  }

  nlohmann::json report = {
      {"config",
       {{"strategy", o.strategy}, {"seed", o.seed}, {"time_limit", o.time_limit}, {"restarts", o.restarts},
        {"passes_per_restart", o.passes}, {"workers", o.workers}, {"order", o.order}}},
      {"rows", rows},
      {"total", {{"exact", total.str()}, {"decimal", to_decimal(total)}}},
  };
  if (o.perturbation) report["config"]["perturbation_strength"] = *o.perturbation;
  const std::string text = report.dump(2) + "\n";
  if (b.out.empty()) {
    io.out << text;
  } else {
    try {
      write_file(b.out, text);
    } catch (const Error& e) {
      return usage(io, e.what());
    }
    io.out << "total " << total.str() << " = " << to_decimal(total) << " over " << instances.size() << " instances\n";
  }
  return kOk;
}

std::optional<std::uint64_t> env_seed() {
  const char* value = std::getenv("MCP_SEED");
  if (!value || !*value) return 0;
  std::uint64_t seed = 0;
  const char* end = value + std::char_traits<char>::length(value);
  const auto [ptr, ec] = std::from_chars(value, end, seed);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return seed;
}

void add_solver_flags(CLI::App& sub, SolveOptions& o) {
  sub.add_option("--strategy", o.strategy, "triangulate | greedy | local-search | exact")->capture_default_str();
  sub.add_option("--seed", o.seed, "RNG seed (default: $MCP_SEED or 0)");
  sub.add_option("--time-limit", o.time_limit, "seconds")->capture_default_str();
  sub.add_option("--workers", o.workers, "parallel restart workers")->capture_default_str();
  sub.add_option("--restarts", o.restarts)->capture_default_str();
  sub.add_option("--passes", o.passes, "stagnant passes per restart; 0 = greedy fixpoint only")->capture_default_str();
  sub.add_option("--perturbation", o.perturbation, "random flips per pass (default n/20)");
  sub.add_option("--order", o.order, "removal order")->check(CLI::IsMember({"random", "degree"}))->capture_default_str();
  sub.add_option("--exact-limit", o.exact_limit)->capture_default_str();
}

void add_pair_flags(CLI::App& sub, PairOptions& o) {
  sub.add_option("--in", o.in, "instance file")->required();
  sub.add_option("--solution", o.solution, "solution file")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Streams io{out, err};
  const auto seed = env_seed();
  if (!seed) return usage(io, "MCP_SEED must be an unsigned integer");

  CLI::App app{"Minimum convex partition toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  gen.seed = *seed;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--family", gen.family, "uniform | edge | illumination | ortho-collinear")->required();
  gen_cmd->add_option("--n", gen.n, "number of points")->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out, "instance file")->required();
  gen_cmd->add_option("--bound", gen.bound, "coordinate bound")->capture_default_str();
  gen_cmd->add_option("--grid-lines", gen.grid_lines, "ortho-collinear: lines per axis (default n/10)");
  gen_cmd->add_option("--map", gen.map, "density map (.pgm or .json); default is a synthetic image");
  gen_cmd->add_option("--scale", gen.scale, "edge/illumination: cell size")->capture_default_str();
  gen_cmd->add_option("--name", gen.name, "instance name override");

  SolveOptions solve_opts;
  solve_opts.seed = *seed;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  solve_cmd->add_option("--in", solve_opts.in, "instance file")->required();
  solve_cmd->add_option("--out", solve_opts.out, "solution file")->required();
  add_solver_flags(*solve_cmd, solve_opts);

  PairOptions verify_opts, score_opts, render_opts;
  auto* verify_cmd = app.add_subcommand("verify", "check feasibility");
  add_pair_flags(*verify_cmd, verify_opts);
  auto* score_cmd = app.add_subcommand("score", "print the exact score");
  add_pair_flags(*score_cmd, score_opts);
  auto* render_cmd = app.add_subcommand("render", "draw a solution as SVG");
  add_pair_flags(*render_cmd, render_opts);
  render_cmd->add_option("--out", render_opts.out, "SVG file")->required();

  BenchOptions bench;
  SolveOptions bench_opts;
  bench_opts.seed = *seed;
  auto* bench_cmd = app.add_subcommand("bench", "solve and score every instance in a directory");
  bench_cmd->add_option("dir", bench.dir, "instance directory")->required();
  bench_cmd->add_option("--out", bench.out, "report file (default stdout)");
  bench_cmd->add_flag("--timing", bench.timing, "include wall times in the report");
  add_solver_flags(*bench_cmd, bench_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, io);
    if (*solve_cmd) return cmd_solve(solve_opts, io);
    if (*verify_cmd) return cmd_verify(verify_opts, io);
    if (*score_cmd) return cmd_score(score_opts, io);
    if (*render_cmd) return cmd_render(render_opts, io);
    if (*bench_cmd) return cmd_bench(bench, bench_opts, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mcp::cli
