#include "mcp/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mcp/error.hpp"

namespace mcp {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column for the diagnostic.
    std::size_t line = 1, column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorKind::SchemaError, where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::SchemaError, where + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t integer(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw Error(ErrorKind::SchemaError, where + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

std::string text_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw Error(ErrorKind::SchemaError, where + "." + key + ": expected a string");
  return v.get<std::string>();
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out.write(content.data(), std::streamsize(content.size()));
}

std::string format_instance(const Instance& instance) {
  std::string out;
  out.reserve(64 + instance.points.size() * 40);
  out += "{\n  \"family\": " + json(std::string(to_string(instance.family))).dump() + ",\n";
  out += "  \"name\": " + json(instance.name).dump() + ",\n";
  out += "  \"points\": [";
  for (std::size_t i = 0; i < instance.points.size(); ++i) {
    const Point& p = instance.points[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"i\": " + std::to_string(p.index) + ", \"x\": " + std::to_string(p.x) + ", \"y\": " + std::to_string(p.y) + "}";
  }
  out += instance.points.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  Instance inst;
  inst.name = text_field(doc, "name", "instance");
  const std::string family = text_field(doc, "family", "instance");
  const auto parsed = parse_family(family);
  if (!parsed) throw Error(ErrorKind::SchemaError, "instance.family: unknown family \"" + family + "\"");
  inst.family = *parsed;
  const json& pts = field(doc, "points", "instance");
  if (!pts.is_array()) throw Error(ErrorKind::SchemaError, "instance.points: expected an array");

  inst.points.assign(pts.size(), Point{-1, 0, 0});
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string where = "points[" + std::to_string(k) + "]";
    const std::int64_t i = integer(pts[k], "i", where);
    const std::int64_t x = integer(pts[k], "x", where);
    const std::int64_t y = integer(pts[k], "y", where);
    if (i < 0 || i >= std::int64_t(pts.size()) || inst.points[std::size_t(i)].index != -1)
      throw Error(ErrorKind::SchemaError, where + ".i: indices must be a permutation of 0..n-1");
    if (!coord_in_range(x) || !coord_in_range(y))
      throw Error(ErrorKind::SchemaError, where + ": coordinate outside (-2^31, 2^31)");
    inst.points[std::size_t(i)] = {Index(i), x, y};
  }
  validate(inst);
  return inst;
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  write_file(path, format_instance(instance));
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

std::string format_solution(const Solution& solution) {
  std::string out;
  out.reserve(64 + solution.edges.size() * 24);
  out += "{\n  \"edges\": [";
  for (std::size_t k = 0; k < solution.edges.size(); ++k) {
    const Edge& e = solution.edges[k];
    out += k == 0 ? "\n" : ",\n";
    out += "    {\"i\": " + std::to_string(e.u) + ", \"j\": " + std::to_string(e.v) + "}";
  }
  out += solution.edges.empty() ? "],\n" : "\n  ],\n";
  out += "  \"instance_name\": " + json(solution.instance_name).dump() + "\n}\n";
  return out;
}

Solution parse_solution(std::string_view text) {
  const json doc = parse_json(text);
  Solution sol;
  sol.instance_name = text_field(doc, "instance_name", "solution");
  const json& edges = field(doc, "edges", "solution");
  if (!edges.is_array()) throw Error(ErrorKind::SchemaError, "solution.edges: expected an array");
  sol.edges.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const std::int64_t i = integer(edges[k], "i", where);
    const std::int64_t j = integer(edges[k], "j", where);
    if (i < 0 || j < 0 || i > INT32_MAX || j > INT32_MAX)
      throw Error(ErrorKind::SchemaError, where + ": index out of range");
    sol.edges.push_back({Index(i), Index(j)});
  }
  return sol;
}

void save_solution(const Solution& solution, const std::filesystem::path& path) {
  write_file(path, format_solution(solution));
}

Solution load_solution(const std::filesystem::path& path) { return parse_solution(read_file(path)); }

void check_against(const Solution& solution, const Instance& instance) {
  if (solution.instance_name != instance.name)
    throw Error(ErrorKind::NameMismatch, "solution is for \"" + solution.instance_name + "\", instance is \"" + instance.name + "\"");
  const Index n = Index(instance.size());
  for (std::size_t k = 0; k < solution.edges.size(); ++k) {
    const Edge& e = solution.edges[k];
    if (e.u >= n || e.v >= n)
      throw Error(ErrorKind::SchemaError, "edges[" + std::to_string(k) + "]: index out of range for " + std::to_string(n) + " points");
  }
}

}  // namespace mcp
