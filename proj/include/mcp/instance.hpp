#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcp/density.hpp"
#include "mcp/geometry.hpp"

namespace mcp {

enum class Family { Uniform, Edge, Illumination, OrthoCollinear, External };

std::string_view to_string(Family family);
/// Accepts the canonical names plus "ortho" for ortho-collinear.
std::optional<Family> parse_family(std::string_view name);

struct Instance {
  std::string name;
  Family family = Family::External;
  std::vector<Point> points;  // points[i].index == i

  std::size_t size() const { return points.size(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Checks indices 0..n-1, coordinate range, distinctness, n >= 3 and non-collinearity.
/// Throws Error(SchemaError).
void validate(const Instance& instance);

Instance make_instance(std::string name, Family family, const std::vector<std::pair<Coord, Coord>>& xy);

/// n distinct lattice points drawn uniformly from {0..bound}^2 with rejection of duplicates.
Instance gen_uniform(std::size_t n, Coord bound, std::uint64_t seed);

/// Cells drawn proportionally to weight, then a uniform lattice point inside the
/// chosen cell's scale x scale block. `family` tags the result (edge or illumination).
Instance gen_density(std::size_t n, const DensityMap& map, Coord scale, std::uint64_t seed,
                     Family family = Family::Illumination);

/// grid_lines distinct abscissae and ordinates from {0..bound}; points sit on random intersections.
Instance gen_ortho_collinear(std::size_t n, std::size_t grid_lines, Coord bound, std::uint64_t seed);

}  // namespace mcp
