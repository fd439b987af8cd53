#include "mcp/density.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mcp/error.hpp"
#include "mcp/random.hpp"

namespace mcp {

std::uint64_t DensityMap::total() const {
  std::uint64_t sum = 0;
  for (auto w : cells) sum += w;
  return sum;
}

namespace {

struct PgmReader {
  std::string_view bytes;
  std::size_t pos = 0;

  void skip_space_and_comments() {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  std::uint64_t number(const char* what) {
    skip_space_and_comments();
    if (pos >= bytes.size() || !std::isdigit(static_cast<unsigned char>(bytes[pos])))
      throw Error(ErrorKind::ParseError, std::string("pgm: expected ") + what + " at byte " + std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
      v = v * 10 + std::uint64_t(bytes[pos] - '0');
      if (v > (std::uint64_t{1} << 40)) throw Error(ErrorKind::ParseError, std::string("pgm: ") + what + " too large");
      ++pos;
    }
    return v;
  }
};

void require_positive(const DensityMap& map) {
  if (map.total() == 0) throw Error(ErrorKind::EmptyMap, "density map has no positive weight");
}

}  // namespace

DensityMap parse_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw Error(ErrorKind::ParseError, "pgm: missing P2/P5 magic");
  const bool binary = bytes[1] == '5';
  PgmReader in{bytes, 2};
  const std::uint64_t width = in.number("width");
  const std::uint64_t height = in.number("height");
  const std::uint64_t maxval = in.number("maxval");
  if (width == 0 || height == 0 || width * height > (std::uint64_t{1} << 28))
    throw Error(ErrorKind::ParseError, "pgm: unsupported dimensions");
  if (maxval == 0 || maxval > 65535) throw Error(ErrorKind::ParseError, "pgm: maxval must be in 1..65535");

  DensityMap map{std::uint32_t(width), std::uint32_t(height), std::vector<std::uint64_t>(width * height)};
  if (binary) {
    ++in.pos;  // single whitespace after maxval
    const std::size_t depth = maxval < 256 ? 1 : 2;
    if (bytes.size() < in.pos + map.cells.size() * depth) throw Error(ErrorKind::ParseError, "pgm: truncated raster");
    for (std::size_t i = 0; i < map.cells.size(); ++i) {
      const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + in.pos + i * depth);
      map.cells[i] = depth == 1 ? p[0] : (std::uint64_t(p[0]) << 8) | p[1];
    }
  } else {
    for (auto& cell : map.cells) cell = in.number("sample");
  }
  for (auto cell : map.cells)
    if (cell > maxval) throw Error(ErrorKind::ParseError, "pgm: sample exceeds maxval");
  require_positive(map);
  return map;
}

DensityMap load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pgm(ss.str());
}

DensityMap parse_density_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  for (const char* key : {"width", "height", "cells"})
    if (!doc.contains(key)) throw Error(ErrorKind::SchemaError, std::string("density map: missing field ") + key);
  if (!doc["width"].is_number_unsigned() || !doc["height"].is_number_unsigned() || !doc["cells"].is_array())
    throw Error(ErrorKind::SchemaError, "density map: width/height must be non-negative integers, cells an array");
  DensityMap map{doc["width"].get<std::uint32_t>(), doc["height"].get<std::uint32_t>(), {}};
  const auto& cells = doc["cells"];
  if (map.width == 0 || map.height == 0 || cells.size() != std::size_t(map.width) * map.height)
    throw Error(ErrorKind::SchemaError, "density map: cells must hold width*height weights");
  map.cells.reserve(cells.size());
  for (const auto& c : cells) {
    if (!c.is_number_unsigned()) throw Error(ErrorKind::SchemaError, "density map: weights must be non-negative integers");
    map.cells.push_back(c.get<std::uint64_t>());
  }
  require_positive(map);
  return map;
}

DensityMap load_density(const std::filesystem::path& path) {
  if (path.extension() == ".pgm") return load_pgm(path);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_density_json(ss.str());
}

DensityMap gradient_map(const DensityMap& image) {
  DensityMap out{image.width, image.height, std::vector<std::uint64_t>(image.cells.size(), 0)};
  auto diff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };
  for (std::uint32_t r = 0; r < image.height; ++r) {
    for (std::uint32_t c = 0; c < image.width; ++c) {
      const std::uint64_t v = image.at(c, r);
      std::uint64_t g = 0;
      if (c > 0) g = std::max(g, diff(v, image.at(c - 1, r)));
      if (c + 1 < image.width) g = std::max(g, diff(v, image.at(c + 1, r)));
      if (r > 0) g = std::max(g, diff(v, image.at(c, r - 1)));
      if (r + 1 < image.height) g = std::max(g, diff(v, image.at(c, r + 1)));
      out.at(c, r) = g;
    }
  }
  return out;
}

DensityMap synthetic_brightness(std::uint32_t width, std::uint32_t height, std::uint64_t seed) {
  if (width == 0 || height == 0) throw Error(ErrorKind::EmptyMap, "synthetic map needs positive dimensions");
  Rng rng(seed);
  DensityMap map{width, height, std::vector<std::uint64_t>(std::size_t(width) * height, 0)};
  const std::int64_t extent = std::max(width, height);
  const int discs = 3 + int(rng.below(4));
  for (int k = 0; k < discs; ++k) {
    const std::int64_t cx = rng.between(0, width - 1);
    const std::int64_t cy = rng.between(0, height - 1);
    const std::int64_t radius = std::max<std::int64_t>(2, rng.between(extent / 8, extent / 3));
    const std::int64_t peak = rng.between(64, 255);
    for (std::uint32_t r = 0; r < height; ++r) {
      for (std::uint32_t c = 0; c < width; ++c) {
        const std::int64_t d2 = (std::int64_t(c) - cx) * (std::int64_t(c) - cx) + (std::int64_t(r) - cy) * (std::int64_t(r) - cy);
        if (d2 < radius * radius) map.at(c, r) += std::uint64_t(peak * (radius * radius - d2) / (radius * radius));
      }
    }
  }
  if (map.total() == 0) map.at(width / 2, height / 2) = 1;
  return map;
}

}  // namespace mcp
