#pragma once

#include <span>
#include <string>

#include "mcp/edge.hpp"
#include "mcp/instance.hpp"
#include "mcp/verify.hpp"

namespace mcp {

/// SVG 1.1 drawing of a partition: one <circle> per point, one <line> per edge,
/// the hull outline, and one class="face" polygon per bounded face. Elements
/// named by a violation in `report` are drawn in red; missing hull edges appear
/// as dashed red paths.
std::string render_svg(const Instance& instance, std::span<const Edge> edges, const FeasibilityReport& report);

}  // namespace mcp
