#include "mcp/instance.hpp"

#include <algorithm>
#include <unordered_set>

#include "mcp/error.hpp"
#include "mcp/random.hpp"

namespace mcp {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Uniform: return "uniform";
    case Family::Edge: return "edge";
    case Family::Illumination: return "illumination";
    case Family::OrthoCollinear: return "ortho-collinear";
    case Family::External: return "external";
  }
  return "external";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "uniform") return Family::Uniform;
  if (name == "edge") return Family::Edge;
  if (name == "illumination") return Family::Illumination;
  if (name == "ortho-collinear" || name == "ortho") return Family::OrthoCollinear;
  if (name == "external") return Family::External;
  return std::nullopt;
}

namespace {

bool all_collinear(const std::vector<Point>& pts) {
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (orientation(pts[0], pts[1], pts[i]) != Orientation::Collinear) return false;
  return true;
}

// Rejection sampling of distinct lattice points; `draw` produces a candidate.
template <class Draw>
std::vector<Point> sample_distinct(std::size_t n, std::size_t max_attempts, Draw&& draw) {
  std::vector<Point> pts;
  pts.reserve(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(n * 2);
  for (std::size_t attempt = 0; pts.size() < n; ++attempt) {
    if (attempt >= max_attempts) throw Error(ErrorKind::TooDense, "could not place distinct points");
    const auto [x, y] = draw();
    const std::uint64_t key = (std::uint64_t(std::uint32_t(x)) << 32) | std::uint32_t(y);
    if (seen.insert(key).second) pts.push_back({Index(pts.size()), x, y});
  }
  return pts;
}

template <class Generate>
std::vector<Point> non_collinear(Generate&& generate) {
  for (int round = 0; round < 64; ++round) {
    auto pts = generate();
    if (!all_collinear(pts)) return pts;
  }
  throw Error(ErrorKind::TooDense, "every draw was collinear");
}

constexpr std::size_t kAttemptsPerPoint = 400;

}  // namespace

void validate(const Instance& instance) {
  const auto& pts = instance.points;
  if (pts.size() < 3) throw Error(ErrorKind::SchemaError, "instance needs at least 3 points");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(pts.size() * 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    if (p.index != Index(i)) throw Error(ErrorKind::SchemaError, "point indices must be 0..n-1 in order");
    if (!coord_in_range(p.x) || !coord_in_range(p.y))
      throw Error(ErrorKind::SchemaError, "coordinate out of range at point " + std::to_string(i));
    const std::uint64_t key = (std::uint64_t(std::uint32_t(p.x)) << 32) | std::uint32_t(p.y);
    if (!seen.insert(key).second) throw Error(ErrorKind::SchemaError, "DuplicatePoint at index " + std::to_string(i));
  }
  if (all_collinear(pts)) throw Error(ErrorKind::SchemaError, "all points are collinear");
}

Instance make_instance(std::string name, Family family, const std::vector<std::pair<Coord, Coord>>& xy) {
  Instance inst{std::move(name), family, {}};
  inst.points.reserve(xy.size());
  for (const auto& [x, y] : xy) inst.points.push_back({Index(inst.points.size()), x, y});
  return inst;
}

Instance gen_uniform(std::size_t n, Coord bound, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  if (bound <= 0 || bound >= kCoordLimit) throw Error(ErrorKind::InvalidArgument, "bound out of range");
  const double lattice = double(bound + 1) * double(bound + 1);
  if (lattice < double(n)) throw Error(ErrorKind::TooDense, "n exceeds the (bound+1)^2 lattice points");

  Rng rng(seed);
  Instance inst;
  inst.name = "uniform-n" + std::to_string(n) + "-b" + std::to_string(bound) + "-s" + std::to_string(seed);
  inst.family = Family::Uniform;
  const std::size_t attempts = kAttemptsPerPoint * n + (lattice < 1e9 ? std::size_t(lattice * 64) : 0);
  inst.points = non_collinear([&] {
    return sample_distinct(n, attempts, [&] {
      const Coord x = rng.between(0, bound);
      const Coord y = rng.between(0, bound);
      return std::pair{x, y};
    });
  });
  return inst;
}

Instance gen_density(std::size_t n, const DensityMap& map, Coord scale, std::uint64_t seed, Family family) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  if (scale <= 0) throw Error(ErrorKind::InvalidArgument, "scale must be positive");
  if (map.width == 0 || map.height == 0 || map.cells.size() != std::size_t(map.width) * map.height)
    throw Error(ErrorKind::EmptyMap, "density map has no cells");
  if (Coord(std::max(map.width, map.height)) * scale >= kCoordLimit)
    throw Error(ErrorKind::InvalidArgument, "scaled map exceeds the coordinate range");

  std::vector<std::size_t> positive;
  std::vector<std::uint64_t> cumulative;
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < map.cells.size(); ++c) {
    if (map.cells[c] == 0) continue;
    total += map.cells[c];
    positive.push_back(c);
    cumulative.push_back(total);
  }
  if (total == 0) throw Error(ErrorKind::EmptyMap, "all weights are zero");
  if (double(positive.size()) * double(scale) * double(scale) < double(n))
    throw Error(ErrorKind::TooDense, "n exceeds the lattice points of the positive cells");

  Rng rng(seed);
  Instance inst;
  inst.name = std::string(to_string(family)) + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
  inst.family = family;
  inst.points = non_collinear([&] {
    return sample_distinct(n, kAttemptsPerPoint * n + 1000, [&] {
      const std::uint64_t r = rng.below(total);
      const std::size_t k = std::size_t(std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
      const std::size_t cell = positive[k];
      const Coord col = Coord(cell % map.width);
      const Coord row = Coord(cell / map.width);
      const Coord x = col * scale + rng.between(0, scale - 1);
      const Coord y = (Coord(map.height) - 1 - row) * scale + rng.between(0, scale - 1);
      return std::pair{x, y};
    });
  });
  return inst;
}

Instance gen_ortho_collinear(std::size_t n, std::size_t grid_lines, Coord bound, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  if (grid_lines < 2) throw Error(ErrorKind::InvalidArgument, "grid_lines must be at least 2");
  if (bound <= 0 || bound >= kCoordLimit) throw Error(ErrorKind::InvalidArgument, "bound out of range");
  if (Coord(grid_lines) > bound + 1) throw Error(ErrorKind::TooDense, "more grid lines than lattice values");
  if (double(grid_lines) * double(grid_lines) < double(n))
    throw Error(ErrorKind::TooDense, "n exceeds the grid_lines^2 intersections");

  Rng rng(seed);
  auto choose_values = [&] {
    std::vector<Coord> values;
    std::unordered_set<Coord> seen;
    while (values.size() < grid_lines) {
      const Coord v = rng.between(0, bound);
      if (seen.insert(v).second) values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    return values;
  };
  const std::vector<Coord> xs = choose_values();
  const std::vector<Coord> ys = choose_values();

  Instance inst;
  inst.name = "ortho-n" + std::to_string(n) + "-g" + std::to_string(grid_lines) + "-s" + std::to_string(seed);
  inst.family = Family::OrthoCollinear;
  const std::size_t attempts = std::max<std::size_t>(kAttemptsPerPoint * n, grid_lines * grid_lines * 64);
  inst.points = non_collinear([&] {
    return sample_distinct(n, attempts, [&] {
      const Coord x = xs[rng.below(grid_lines)];
      const Coord y = ys[rng.below(grid_lines)];
      return std::pair{x, y};
    });
  });
  return inst;
}

}  // namespace mcp
