#pragma once

#include <utility>
#include <vector>

#include "mcp/instance.hpp"
#include "mcp/verify.hpp"
#include "oracle.hpp"

namespace fixtures {

inline mcp::Instance square() {
  return mcp::make_instance("square", mcp::Family::External, {{0, 0}, {10, 0}, {10, 10}, {0, 10}});
}
inline mcp::Instance square_center() {
  return mcp::make_instance("square-center", mcp::Family::External, {{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 5}});
}
inline mcp::Instance square_offcenter() {
  return mcp::make_instance("square-offcenter", mcp::Family::External, {{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 6}});
}
inline mcp::Instance triangle_interior() {
  return mcp::make_instance("triangle-interior", mcp::Family::External, {{0, 0}, {4, 0}, {0, 4}, {1, 1}});
}
inline mcp::Instance pentagon_chain() {
  return mcp::make_instance("pentagon-chain", mcp::Family::External, {{0, 0}, {5, 0}, {10, 0}, {10, 10}, {0, 10}});
}
inline mcp::Instance grid3() {
  std::vector<std::pair<mcp::Coord, mcp::Coord>> xy;
  for (mcp::Coord y = 0; y < 3; ++y)
    for (mcp::Coord x = 0; x < 3; ++x) xy.emplace_back(x * 5, y * 5);
  return mcp::make_instance("grid3", mcp::Family::External, xy);
}

inline mcp::EdgeSet square_hull() { return {{0, 1}, {1, 2}, {2, 3}, {0, 3}}; }
inline mcp::EdgeSet square_diagonal() { return {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}; }
inline mcp::EdgeSet square_center_triangulation() {
  return {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
}

inline std::vector<oracle::P> to_oracle(const mcp::Instance& instance) {
  std::vector<oracle::P> out;
  for (const auto& p : instance.points) out.push_back({p.x, p.y});
  return out;
}
inline std::vector<oracle::Seg> to_oracle(const mcp::EdgeSet& edges) {
  std::vector<oracle::Seg> out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

inline mcp::Rational q(long long a, long long b) { return mcp::Rational(a) / mcp::Rational(b); }

}  // namespace fixtures
