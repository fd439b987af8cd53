#include "mcp/conflicts.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace mcp {

namespace {

Coord floor_div(Wide num, Wide den) {
  Wide q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return static_cast<Coord>(q);
}

void sort_unique(std::vector<Conflict>& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

// Cell assignment shared by points and segments: a point belongs to
// (floor((x - x0) / cw), floor((y - y0) / ch)). A segment is registered in a
// superset of the cells its points fall into.
class Grid {
 public:
  Grid(std::span<const Point> points, std::size_t segments) {
    Coord xmin = points[0].x, xmax = points[0].x, ymin = points[0].y, ymax = points[0].y;
    for (const Point& p : points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    x0_ = xmin;
    y0_ = ymin;
    const double w = double(xmax - xmin + 1), h = double(ymax - ymin + 1);
    const double target = std::max<double>(1.0, double(segments));
    cols_ = Index(std::clamp(std::lround(std::sqrt(target * w / h)), 1L, 2048L));
    rows_ = Index(std::clamp(std::lround(std::sqrt(target * h / w)), 1L, 2048L));
    cw_ = (xmax - xmin + cols_) / cols_;
    ch_ = (ymax - ymin + rows_) / rows_;
  }

  Index cell_count() const { return cols_ * rows_; }

  Index cell_of(const Point& p) const { return row(Wide(p.y), 1) * cols_ + col(p.x); }

  template <class Visit>
  void for_each_cell(const Point& a0, const Point& b0, Visit&& visit) const {
    const Point& a = a0.x <= b0.x ? a0 : b0;
    const Point& b = a0.x <= b0.x ? b0 : a0;
    const Index ca = col(a.x), cb = col(b.x);
    const Coord dx = b.x - a.x, dy = b.y - a.y;
    for (Index c = ca; c <= cb; ++c) {
      Index r1, r2;
      if (dx == 0) {
        r1 = row(Wide(std::min(a.y, b.y)), 1);
        r2 = row(Wide(std::max(a.y, b.y)), 1);
      } else {
        const Coord lo = std::max(a.x, x0_ + Coord(c) * cw_);
        const Coord hi = std::min(b.x, x0_ + Coord(c + 1) * cw_);
        r1 = row(Wide(a.y) * dx + Wide(lo - a.x) * dy, dx);
        r2 = row(Wide(a.y) * dx + Wide(hi - a.x) * dy, dx);
        if (r1 > r2) std::swap(r1, r2);
      }
      for (Index r = r1; r <= r2; ++r) visit(r * cols_ + c);
    }
  }

 private:
  Index col(Coord x) const { return std::clamp<Index>(Index(floor_div(Wide(x - x0_), Wide(cw_))), 0, cols_ - 1); }

  // Row of the rational ordinate num / den (den > 0).
  Index row(Wide num, Wide den) const {
    return std::clamp<Index>(Index(floor_div(num - Wide(y0_) * den, Wide(ch_) * den)), 0, rows_ - 1);
  }

  Coord x0_ = 0, y0_ = 0, cw_ = 1, ch_ = 1;
  Index cols_ = 1, rows_ = 1;
};

// Compressed cell -> item lists.
struct Buckets {
  std::vector<Index> offsets;
  std::vector<Index> items;

  std::span<const Index> cell(Index c) const {
    return {items.data() + offsets[c], std::size_t(offsets[c + 1] - offsets[c])};
  }
};

template <class ForEach>
Buckets bucket(Index cells, std::size_t count, ForEach&& for_each) {
  Buckets b;
  b.offsets.assign(std::size_t(cells) + 1, 0);
  for (std::size_t i = 0; i < count; ++i) for_each(i, [&](Index c) { ++b.offsets[c + 1]; });
  for (Index c = 0; c < cells; ++c) b.offsets[c + 1] += b.offsets[c];
  b.items.resize(b.offsets.back());
  std::vector<Index> fill(b.offsets.begin(), b.offsets.end() - 1);
  for (std::size_t i = 0; i < count; ++i) for_each(i, [&](Index c) { b.items[fill[c]++] = Index(i); });
  return b;
}

}  // namespace

std::vector<Conflict> find_conflicts_serial(std::span<const Point> points, std::span<const Edge> edges) {
  std::vector<Conflict> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point& a = points[edges[i].u];
    const Point& b = points[edges[i].v];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (segments_properly_cross(a, b, points[edges[j].u], points[edges[j].v]))
        out.push_back({Conflict::Kind::Crossing, Index(i), Index(j)});
    }
    for (const Point& p : points) {
      if (point_on_open_segment(p, a, b)) out.push_back({Conflict::Kind::PointOnEdge, p.index, Index(i)});
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Conflict> find_conflicts(std::span<const Point> points, std::span<const Edge> edges, int threads) {
  if (points.empty() || edges.empty()) return {};
  const Grid grid(points, edges.size());
  const Index cells = grid.cell_count();

  const Buckets segs = bucket(cells, edges.size(), [&](std::size_t i, auto&& emit) {
    grid.for_each_cell(points[edges[i].u], points[edges[i].v], emit);
  });
  const Buckets pts = bucket(cells, points.size(), [&](std::size_t i, auto&& emit) { emit(grid.cell_of(points[i])); });

  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::vector<std::vector<Conflict>> found(static_cast<std::size_t>(nthreads));

#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
  for (Index c = 0; c < cells; ++c) {
    auto& local = found[omp_get_thread_num()];
    const auto s = segs.cell(c);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Point& a = points[edges[s[i]].u];
      const Point& b = points[edges[s[i]].v];
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (segments_properly_cross(a, b, points[edges[s[j]].u], points[edges[s[j]].v]))
          local.push_back({Conflict::Kind::Crossing, std::min(s[i], s[j]), std::max(s[i], s[j])});
      }
      for (Index p : pts.cell(c)) {
        if (point_on_open_segment(points[p], a, b)) local.push_back({Conflict::Kind::PointOnEdge, p, s[i]});
      }
    }
  }

  std::vector<Conflict> out;
  for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
  sort_unique(out);
  return out;
}

}  // namespace mcp
