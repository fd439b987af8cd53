#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mcp/edge.hpp"
#include "mcp/instance.hpp"

namespace mcp {

struct Solution {
  std::string instance_name;
  EdgeSet edges;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Instance document:  {"family": ..., "name": ..., "points": [{"i": 0, "x": 1, "y": 2}, ...]}
// Solution document:  {"edges": [{"i": 0, "j": 1}, ...], "instance_name": ...}
// Keys are sorted, one array element per line, newline-terminated.

std::string format_instance(const Instance& instance);
Instance parse_instance(std::string_view text);
void save_instance(const Instance& instance, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

std::string format_solution(const Solution& solution);
Solution parse_solution(std::string_view text);
void save_solution(const Solution& solution, const std::filesystem::path& path);
Solution load_solution(const std::filesystem::path& path);

/// Name must match (Error(NameMismatch)) and every index must be < n (Error(SchemaError)).
void check_against(const Solution& solution, const Instance& instance);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace mcp
