#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "mcp/cli.hpp"
#include "mcp/io.hpp"

using namespace mcp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run mcp_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mcp-test-cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string str(const fs::path& p) { return p.string(); }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++k;
  return k;
}

}  // namespace

TEST_CASE("gen") {
  const fs::path dir = fresh_dir("gen");
  CHECK(mcp_cli({"gen", "--family", "uniform", "--n", "100", "--seed", "1", "--out", str(dir / "u.json")}).code == 0);
  CHECK(load_instance(dir / "u.json").size() == 100);

  CHECK(mcp_cli({"gen", "--family", "ortho", "--n", "36", "--grid-lines", "6", "--seed", "2", "--out", str(dir / "o.json")})
            .code == 0);
  // 50 distinct points do not fit on 6 x 6 intersections.
  CHECK(mcp_cli({"gen", "--family", "ortho", "--n", "50", "--grid-lines", "6", "--seed", "2", "--out", str(dir / "x.json")})
            .code == 3);
  const Instance ortho = load_instance(dir / "o.json");
  std::map<Coord, int> columns;
  for (const auto& p : ortho.points) ++columns[p.x];
  int longest = 0;
  for (auto [x, k] : columns) longest = std::max(longest, k);
  CHECK(longest >= 3);
  CHECK(columns.size() <= 6);

  CHECK(mcp_cli({"gen", "--family", "uniform", "--n", "2", "--out", str(dir / "bad.json")}).code == 2);
  CHECK(mcp_cli({"gen", "--family", "uniform", "--n", "5", "--bound", "1", "--out", str(dir / "bad.json")}).code == 3);
  CHECK(mcp_cli({"gen", "--family", "spiral", "--n", "5", "--out", str(dir / "bad.json")}).code == 2);
  CHECK(mcp_cli({"gen", "--n", "5", "--out", str(dir / "bad.json")}).code == 2);
  CHECK_FALSE(fs::exists(dir / "bad.json"));
  CHECK_FALSE(fs::exists(dir / "x.json"));

  CHECK(mcp_cli({"gen", "--family", "edge", "--n", "300", "--seed", "4", "--out", str(dir / "e.json")}).code == 0);
  CHECK(load_instance(dir / "e.json").family == Family::Edge);
  CHECK(mcp_cli({"gen", "--family", "illumination", "--n", "300", "--seed", "4", "--out", str(dir / "i.json")}).code == 0);

  write_file(dir / "map.pgm", "P2\n2 1\n255\n3 1\n");
  CHECK(mcp_cli({"gen", "--family", "illumination", "--n", "50", "--map", str(dir / "map.pgm"), "--scale", "100",
                 "--out", str(dir / "m.json"), "--name", "mapped"})
            .code == 0);
  CHECK(load_instance(dir / "m.json").name == "mapped");
  write_file(dir / "zero.pgm", "P2\n2 1\n255\n0 0\n");
  CHECK(mcp_cli({"gen", "--family", "illumination", "--n", "50", "--map", str(dir / "zero.pgm"), "--out",
                 str(dir / "z.json")})
            .code == 3);
}

TEST_CASE("gen is reproducible and honours MCP_SEED") {
  const fs::path dir = fresh_dir("seed");
  for (const char* family : {"uniform", "edge", "illumination", "ortho-collinear"}) {
    CHECK(mcp_cli({"gen", "--family", family, "--n", "500", "--seed", "9", "--out", str(dir / "a.json")}).code == 0);
    CHECK(mcp_cli({"gen", "--family", family, "--n", "500", "--seed", "9", "--out", str(dir / "b.json")}).code == 0);
    CHECK(read_file(dir / "a.json") == read_file(dir / "b.json"));
  }
  CHECK(mcp_cli({"gen", "--family", "uniform", "--n", "500", "--seed", "9", "--out", str(dir / "b.json")}).code == 0);
  ::setenv("MCP_SEED", "9", 1);
  CHECK(mcp_cli({"gen", "--family", "uniform", "--n", "500", "--out", str(dir / "env.json")}).code == 0);
  ::setenv("MCP_SEED", "nine", 1);
  CHECK(mcp_cli({"gen", "--family", "uniform", "--n", "500", "--out", str(dir / "bad.json")}).code == 2);
  ::unsetenv("MCP_SEED");
  CHECK(read_file(dir / "env.json") == read_file(dir / "b.json"));
}

TEST_CASE("solve") {
  const fs::path dir = fresh_dir("solve");
  save_instance(fixtures::square(), dir / "square.json");
  save_instance(fixtures::square_offcenter(), dir / "off.json");

  const Run greedy = mcp_cli({"solve", "--in", str(dir / "square.json"), "--out", str(dir / "s.json"), "--strategy", "greedy"});
  CHECK(greedy.code == 0);
  CHECK(greedy.out.find("1/5 = 0.200000000") != std::string::npos);

  const Run exact = mcp_cli({"solve", "--in", str(dir / "off.json"), "--out", str(dir / "o.json"), "--strategy", "exact"});
  CHECK(exact.code == 0);
  CHECK(exact.out.find("f=3") != std::string::npos);
  CHECK(mcp_cli({"verify", "--in", str(dir / "off.json"), "--solution", str(dir / "o.json")}).code == 0);

  CHECK(mcp_cli({"solve", "--in", str(dir / "square.json"), "--out", str(dir / "t.json"), "--time-limit", "0"}).code == 2);
  CHECK(mcp_cli({"solve", "--in", str(dir / "square.json"), "--out", str(dir / "t.json"), "--strategy", "magic"}).code == 2);
  CHECK(mcp_cli({"solve", "--in", str(dir / "absent.json"), "--out", str(dir / "t.json")}).code == 2);

  save_instance(gen_uniform(12, 100, 1), dir / "twelve.json");
  CHECK(mcp_cli({"solve", "--in", str(dir / "twelve.json"), "--out", str(dir / "t.json"), "--strategy", "exact"}).code == 2);
}

TEST_CASE("solve output is byte-identical across runs") {
  const fs::path dir = fresh_dir("determinism");
  save_instance(gen_ortho_collinear(800, 40, 10000, 5), dir / "in.json");
  for (const char* name : {"a.json", "b.json"}) {
    CHECK(mcp_cli({"solve", "--in", str(dir / "in.json"), "--out", str(dir / name), "--seed", "3", "--restarts", "3",
                   "--passes", "5", "--time-limit", "120", "--workers", "1"})
              .code == 0);
  }
  CHECK(read_file(dir / "a.json") == read_file(dir / "b.json"));
  CHECK(mcp_cli({"verify", "--in", str(dir / "in.json"), "--solution", str(dir / "a.json")}).code == 0);
}

TEST_CASE("verify") {
  const fs::path dir = fresh_dir("verify");
  save_instance(fixtures::square(), dir / "square.json");
  save_solution({"square", fixtures::square_diagonal()}, dir / "tri.json");
  save_solution({"square", EdgeSet{{0, 2}, {1, 3}}}, dir / "cross.json");
  save_solution({"other", fixtures::square_hull()}, dir / "wrong.json");
  save_solution({"square", EdgeSet{{0, 9}}}, dir / "range.json");

  CHECK(mcp_cli({"verify", "--in", str(dir / "square.json"), "--solution", str(dir / "tri.json")}).code == 0);
  const Run cross = mcp_cli({"verify", "--in", str(dir / "square.json"), "--solution", str(dir / "cross.json")});
  CHECK(cross.code == 1);
  CHECK(cross.out.find("CrossingEdges 0 2 1 3") != std::string::npos);
  CHECK(mcp_cli({"verify", "--in", str(dir / "square.json"), "--solution", str(dir / "wrong.json")}).code == 2);
  CHECK(mcp_cli({"verify", "--in", str(dir / "square.json"), "--solution", str(dir / "range.json")}).code == 2);
  CHECK(mcp_cli({"verify", "--in", str(dir / "square.json")}).code == 2);
}

TEST_CASE("score") {
  const fs::path dir = fresh_dir("score");
  save_instance(fixtures::square(), dir / "square.json");
  save_solution({"square", fixtures::square_hull()}, dir / "hull.json");
  save_solution({"square", fixtures::square_diagonal()}, dir / "tri.json");
  save_solution({"square", EdgeSet{{0, 2}, {1, 3}}}, dir / "cross.json");

  const Run hull = mcp_cli({"score", "--in", str(dir / "square.json"), "--solution", str(dir / "hull.json")});
  CHECK(hull.code == 0);
  CHECK(hull.out == "1/5 = 0.200000000\n");
  CHECK(mcp_cli({"score", "--in", str(dir / "square.json"), "--solution", str(dir / "tri.json")}).out ==
        "0/5 = 0.000000000\n");
  const Run bad = mcp_cli({"score", "--in", str(dir / "square.json"), "--solution", str(dir / "cross.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out == "0 (infeasible)\n");
}

TEST_CASE("bench") {
  const fs::path dir = fresh_dir("bench");
  const fs::path corpus = dir / "corpus";
  fs::create_directories(corpus);
  save_instance(fixtures::square(), corpus / "square.json");
  save_instance(fixtures::square_center(), corpus / "square-center.json");

  const std::vector<std::string> args{"bench", str(corpus), "--out", str(dir / "r1.json"), "--seed", "1", "--restarts", "10"};
  CHECK(mcp_cli(args).code == 0);
  const std::string report = read_file(dir / "r1.json");
  CHECK(report.find("\"exact\": \"9/20\"") != std::string::npos);
  CHECK(report.find("\"decimal\": \"0.450000000\"") != std::string::npos);
  CHECK(report.find("wall_time") == std::string::npos);

  std::vector<std::string> again = args;
  again[3] = str(dir / "r2.json");
  CHECK(mcp_cli(again).code == 0);
  CHECK(read_file(dir / "r2.json") == report);

  std::vector<std::string> timed = args;
  timed.push_back("--timing");
  CHECK(mcp_cli(timed).code == 0);
  CHECK(read_file(dir / "r1.json").find("wall_time") != std::string::npos);

  const fs::path empty = dir / "empty";
  fs::create_directories(empty);
  CHECK(mcp_cli({"bench", str(empty)}).code == 2);
  CHECK(mcp_cli({"bench", str(dir / "nowhere")}).code == 2);
}

TEST_CASE("render") {
  const fs::path dir = fresh_dir("render");
  save_instance(fixtures::square(), dir / "square.json");
  save_solution({"square", fixtures::square_hull()}, dir / "hull.json");
  save_solution({"square", EdgeSet{{0, 2}, {1, 3}}}, dir / "cross.json");

  CHECK(mcp_cli({"render", "--in", str(dir / "square.json"), "--solution", str(dir / "hull.json"), "--out",
                 str(dir / "hull.svg")})
            .code == 0);
  const std::string svg = read_file(dir / "hull.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(count(svg, "<circle") == 4);
  CHECK(count(svg, "<line") == 4);
  CHECK(count(svg, "class=\"face\"") == 1);
  CHECK(count(svg, "#d00000") == 0);

  CHECK(mcp_cli({"render", "--in", str(dir / "square.json"), "--solution", str(dir / "cross.json"), "--out",
                 str(dir / "cross.svg")})
            .code == 1);
  const std::string bad = read_file(dir / "cross.svg");
  CHECK(count(bad, "<line") == 2);
  CHECK(count(bad, "#d00000") >= 2);

  CHECK(mcp_cli({"render", "--in", str(dir / "none.json"), "--solution", str(dir / "hull.json"), "--out",
                 str(dir / "x.svg")})
            .code == 2);
}

TEST_CASE("the installed binary reports exit codes") {
  const fs::path dir = fresh_dir("binary");
  save_instance(fixtures::square(), dir / "square.json");
  save_solution({"square", EdgeSet{{0, 2}, {1, 3}}}, dir / "cross.json");
  const std::string base = std::string(MCP_BINARY) + " ";
  auto status = [](const std::string& cmd) { return WEXITSTATUS(std::system((cmd + " >/dev/null 2>&1").c_str())); };
  CHECK(status(base + "verify --in " + str(dir / "square.json") + " --solution " + str(dir / "cross.json")) == 1);
  CHECK(status(base + "solve --in " + str(dir / "square.json") + " --out " + str(dir / "s.json")) == 0);
  CHECK(status(base + "bogus") == 2);
  CHECK(status(base + "--help") == 0);
}
