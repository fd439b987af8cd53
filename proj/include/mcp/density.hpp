#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace mcp {

/// Non-negative weights on a width x height grid; row 0 is the top row, as in images.
struct DensityMap {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint64_t> cells;  // row-major

  std::uint64_t at(std::uint32_t col, std::uint32_t row) const { return cells[std::size_t(row) * width + col]; }
  std::uint64_t& at(std::uint32_t col, std::uint32_t row) { return cells[std::size_t(row) * width + col]; }
  std::uint64_t total() const;
};

/// Portable graymap, ASCII (P2) or binary (P5), 8 or 16 bit.
/// Throws Error(ParseError) on malformed input, Error(EmptyMap) if all weights are zero.
DensityMap parse_pgm(std::string_view bytes);
DensityMap load_pgm(const std::filesystem::path& path);

/// Inline grid: {"width": W, "height": H, "cells": [row-major weights]}.
DensityMap parse_density_json(std::string_view text);

/// Loads by extension: .pgm as graymap, anything else as the inline grid.
DensityMap load_density(const std::filesystem::path& path);

/// Rate of change of an image: max absolute difference to the 4-neighbours.
DensityMap gradient_map(const DensityMap& image);

/// Deterministic stand-in brightness image: a few soft discs of varying radius and intensity.
DensityMap synthetic_brightness(std::uint32_t width, std::uint32_t height, std::uint64_t seed);

}  // namespace mcp
