#include "mcp/subdivision.hpp"

#include <algorithm>
#include <string>

#include "mcp/conflicts.hpp"
#include "mcp/error.hpp"

namespace mcp {

namespace {

// Counterclockwise angle of (dx, dy) measured from (rx, ry) lies in (0, angle of (bx, by)),
// where b == r stands for a full turn.
bool strictly_inside_wedge(Coord rx, Coord ry, Coord bx, Coord by, Coord dx, Coord dy) {
  auto half = [&](Coord x, Coord y) {
    const Wide c = Wide(rx) * y - Wide(ry) * x;
    const Wide d = Wide(rx) * x + Wide(ry) * y;
    return (c > 0 || (c == 0 && d > 0)) ? 0 : 1;
  };
  auto is_ref = [&](Coord x, Coord y) { return Wide(rx) * y - Wide(ry) * x == 0 && Wide(rx) * x + Wide(ry) * y > 0; };
  if (is_ref(dx, dy)) return false;
  if (is_ref(bx, by)) return true;
  const int hd = half(dx, dy), hb = half(bx, by);
  if (hd != hb) return hd < hb;
  return Wide(dx) * by - Wide(dy) * bx > 0;
}

}  // namespace

Subdivision Subdivision::build(std::span<const Point> points, std::span<const Edge> edges) {
  const Index n = Index(points.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
      throw Error(ErrorKind::BadIndex, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
  }
  EdgeSet sorted(edges.begin(), edges.end());
  for (Edge& e : sorted) e = make_edge(e.u, e.v);
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    throw Error(ErrorKind::DuplicateEdge, "edge (" + std::to_string(it->u) + ", " + std::to_string(it->v) + ")");

  const auto conflicts = find_conflicts(points, edges);
  for (const Conflict& c : conflicts) {
    if (c.kind == Conflict::Kind::Crossing) {
      const Edge& a = edges[c.first];
      const Edge& b = edges[c.second];
      throw Error(ErrorKind::CrossingEdges, "(" + std::to_string(a.u) + ", " + std::to_string(a.v) + ") x (" +
                                                std::to_string(b.u) + ", " + std::to_string(b.v) + ")");
    }
    const Edge& e = edges[c.second];
    throw Error(ErrorKind::PointOnEdge, "point " + std::to_string(c.first) + " on (" + std::to_string(e.u) + ", " +
                                            std::to_string(e.v) + ")");
  }
  return assemble(points, edges);
}

Subdivision Subdivision::build_trusted(std::span<const Point> points, std::span<const Edge> edges) {
  return assemble(points, edges);
}

Subdivision Subdivision::assemble(std::span<const Point> points, std::span<const Edge> edges) {
  Subdivision s;
  const std::size_t n = points.size();
  s.points_.assign(points.begin(), points.end());
  s.half_edges_.resize(2 * edges.size());
  s.vertex_edge_.assign(n, kNone);
  s.degree_.assign(n, 0);
  s.lookup_.reserve(edges.size() * 2);
  s.edge_count_ = edges.size();

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = make_edge(edges[i].u, edges[i].v);
    s.half_edges_[2 * i].origin = e.u;
    s.half_edges_[2 * i + 1].origin = e.v;
    s.lookup_.emplace(edge_key(e.u, e.v), Index(2 * i));
    ++s.degree_[e.u];
    ++s.degree_[e.v];
  }

  // Rotation system: outgoing half-edges sorted counterclockwise around each vertex.
  std::vector<Index> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + Index(s.degree_[v]);
  std::vector<Index> around(offset.back());
  std::vector<Index> fill(offset.begin(), offset.end() - 1);
  for (Index h = 0; h < Index(s.half_edges_.size()); ++h) around[fill[s.origin(h)]++] = h;

  for (std::size_t v = 0; v < n; ++v) {
    auto first = around.begin() + offset[v], last = around.begin() + offset[v + 1];
    if (first == last) continue;
    const Point& o = s.points_[v];
    std::sort(first, last, [&](Index a, Index b) {
      const Point& pa = s.points_[s.target(a)];
      const Point& pb = s.points_[s.target(b)];
      return angle_less(pa.x - o.x, pa.y - o.y, pb.x - o.x, pb.y - o.y);
    });
    const std::size_t d = std::size_t(last - first);
    for (std::size_t i = 0; i < d; ++i) {
      const Index h = first[i];
      const Index ccw = first[(i + 1) % d];
      s.half_edges_[h].prev = twin(ccw);
      s.half_edges_[twin(ccw)].next = h;
    }
    s.vertex_edge_[v] = *first;
  }

  for (Index h = 0; h < Index(s.half_edges_.size()); ++h) {
    if (s.half_edges_[h].face != kNone) continue;
    const Index f = Index(s.faces_.size());
    s.faces_.push_back({h, false, true});
    s.relabel(h, f);
    s.faces_[f].bounded = s.face_twice_area(f) > 0;
    if (s.faces_[f].bounded) ++s.bounded_count_;
  }
  return s;
}

void Subdivision::relabel(Index start, Index f) {
  Index h = start;
  do {
    half_edges_[h].face = f;
    h = half_edges_[h].next;
  } while (h != start);
}

std::optional<Index> Subdivision::find(Index u, Index v) const {
  const auto it = lookup_.find(edge_key(u, v));
  if (it == lookup_.end()) return std::nullopt;
  return origin(it->second) == u ? it->second : twin(it->second);
}

std::vector<Index> Subdivision::outgoing(Index v) const {
  std::vector<Index> out;
  const Index start = vertex_edge_[v];
  if (start == kNone) return out;
  Index h = start;
  do {
    out.push_back(h);
    h = twin(prev(h));
  } while (h != start);
  return out;
}

std::vector<Index> Subdivision::live_faces() const {
  std::vector<Index> out;
  for (Index f = 0; f < Index(faces_.size()); ++f)
    if (faces_[f].alive) out.push_back(f);
  return out;
}

std::vector<Index> Subdivision::face_vertices(Index f) const {
  std::vector<Index> out;
  const Index start = faces_[f].edge;
  Index h = start;
  do {
    out.push_back(origin(h));
    h = next(h);
  } while (h != start);
  return out;
}

std::size_t Subdivision::face_size(Index f) const {
  std::size_t k = 0;
  const Index start = faces_[f].edge;
  Index h = start;
  do {
    ++k;
    h = next(h);
  } while (h != start);
  return k;
}

Wide Subdivision::face_twice_area(Index f) const {
  Wide sum = 0;
  const Index start = faces_[f].edge;
  Index h = start;
  do {
    const Point& p = points_[origin(h)];
    const Point& q = points_[target(h)];
    sum += Wide(p.x) * q.y - Wide(q.x) * p.y;
    h = next(h);
  } while (h != start);
  return sum;
}

bool Subdivision::face_is_convex(Index f) const {
  const Index start = faces_[f].edge;
  Index h = start;
  do {
    if (!angle_at_most_pi(points_[origin(prev(h))], points_[origin(h)], points_[target(h)])) return false;
    h = next(h);
  } while (h != start);
  return true;
}

bool Subdivision::is_boundary_edge(Edge e) const {
  const auto h = find(e.u, e.v);
  if (!h) return false;
  return !faces_[face_of(*h)].bounded || !faces_[face_of(twin(*h))].bounded;
}

MergeVerdict Subdivision::merge_preview(Edge e) const {
  const auto found = find(e.u, e.v);
  if (!found) throw Error(ErrorKind::UnknownEdge, "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
  const Index h = *found, t = twin(h);
  const Index f1 = face_of(h), f2 = face_of(t);
  if (!faces_[f1].bounded || !faces_[f2].bounded) return MergeVerdict::BordersOuterFace;
  if (f1 == f2) return MergeVerdict::SameFace;
  // Merged corner at u: prev(h) arrives, next(t) leaves. Likewise at v.
  const Point& u = points_[origin(h)];
  const Point& v = points_[origin(t)];
  if (!angle_at_most_pi(points_[origin(prev(h))], u, points_[target(next(t))])) return MergeVerdict::ReflexMerge;
  if (!angle_at_most_pi(points_[origin(prev(t))], v, points_[target(next(h))])) return MergeVerdict::ReflexMerge;
  return MergeVerdict::Removable;
}

void Subdivision::remove_edge(Edge e) {
  const MergeVerdict verdict = merge_preview(e);
  if (verdict != MergeVerdict::Removable)
    throw Error(ErrorKind::NotRemovable, "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
  unlink(*find(e.u, e.v));
}

void Subdivision::erase_edge(Edge e) {
  const auto h = find(e.u, e.v);
  if (!h) throw Error(ErrorKind::UnknownEdge, "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
  if (face_of(*h) == face_of(twin(*h)))
    throw Error(ErrorKind::NotRemovable, "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is a bridge");
  unlink(*h);
}

void Subdivision::unlink(Index h) {
  const Index t = twin(h);
  const Index f1 = face_of(h), f2 = face_of(t);
  const Index ph = prev(h), nh = next(h), pt = prev(t), nt = next(t);
  const Index u = origin(h), v = origin(t);

  half_edges_[ph].next = nt;
  half_edges_[nt].prev = ph;
  half_edges_[pt].next = nh;
  half_edges_[nh].prev = pt;

  const bool was_bounded1 = faces_[f1].bounded, was_bounded2 = faces_[f2].bounded;
  relabel(nh, f1);
  faces_[f1].edge = nh;
  faces_[f1].bounded = was_bounded1 && was_bounded2;
  faces_[f2].alive = false;
  faces_[f2].edge = kNone;
  free_faces_.push_back(f2);
  bounded_count_ -= std::size_t(was_bounded1) + std::size_t(was_bounded2) - std::size_t(faces_[f1].bounded);

  if (vertex_edge_[u] == h) vertex_edge_[u] = nt;
  if (vertex_edge_[v] == t) vertex_edge_[v] = nh;
  --degree_[u];
  --degree_[v];
  --edge_count_;
  lookup_.erase(edge_key(u, v));
  half_edges_[h] = HalfEdge{};
  half_edges_[t] = HalfEdge{};
  free_slots_.push_back(h / 2);
}

Index Subdivision::new_slot() {
  if (!free_slots_.empty()) {
    const Index s = free_slots_.back();
    free_slots_.pop_back();
    return s;
  }
  half_edges_.resize(half_edges_.size() + 2);
  return Index(half_edges_.size() / 2 - 1);
}

Index Subdivision::split_face(Index from, Index to) {
  const Index u = origin(from), v = origin(to);
  const Index f = face_of(from);
  const Index slot = new_slot();
  const Index g = 2 * slot, gt = g + 1;
  const Index a_in = prev(from), b_in = prev(to);

  half_edges_[g] = {u, to, a_in, f};
  half_edges_[gt] = {v, from, b_in, f};
  half_edges_[a_in].next = g;
  half_edges_[to].prev = g;
  half_edges_[b_in].next = gt;
  half_edges_[from].prev = gt;

  lookup_[edge_key(u, v)] = u < v ? g : gt;
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;

  // Walking from g either closes without meeting gt (a split) or joins two cycles.
  bool split = true;
  for (Index h = next(g); h != g; h = next(h)) {
    if (h == gt) {
      split = false;
      break;
    }
  }
  faces_[f].edge = gt;
  if (split) {
    Index nf;
    if (!free_faces_.empty()) {
      nf = free_faces_.back();
      free_faces_.pop_back();
    } else {
      nf = Index(faces_.size());
      faces_.emplace_back();
    }
    faces_[nf] = {g, faces_[f].bounded, true};
    relabel(g, nf);
    if (faces_[f].bounded) ++bounded_count_;
  }
  return g;
}

Index Subdivision::wedge_for(Index v, Coord dx, Coord dy) const {
  const Point& o = points_[v];
  const Index start = vertex_edge_[v];
  Index h = start;
  do {
    const Index ccw = twin(prev(h));
    const Point& a = points_[target(h)];
    const Point& b = points_[target(ccw)];
    if (strictly_inside_wedge(a.x - o.x, a.y - o.y, b.x - o.x, b.y - o.y, dx, dy)) return h;
    h = ccw;
  } while (h != start);
  return kNone;
}

void Subdivision::insert_edge(Edge e) {
  const Index n = Index(points_.size());
  if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
    throw Error(ErrorKind::BadIndex, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
  if (contains(e)) throw Error(ErrorKind::DuplicateEdge, "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
  if (degree_[e.u] == 0 || degree_[e.v] == 0)
    throw Error(ErrorKind::InvalidArgument, "insert_edge needs endpoints of positive degree");
  const Point& u = points_[e.u];
  const Point& v = points_[e.v];
  const Index hu = wedge_for(e.u, v.x - u.x, v.y - u.y);
  const Index hv = wedge_for(e.v, u.x - v.x, u.y - v.y);
  if (hu == kNone || hv == kNone || face_of(hu) != face_of(hv))
    throw Error(ErrorKind::CrossingEdges, "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") leaves its face");
  const Index f = face_of(hu);
  Index h = faces_[f].edge;
  do {
    const Point& p = points_[origin(h)];
    const Point& q = points_[target(h)];
    if (segments_properly_cross(u, v, p, q))
      throw Error(ErrorKind::CrossingEdges, "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    if (point_on_open_segment(p, u, v))
      throw Error(ErrorKind::PointOnEdge, "point " + std::to_string(p.index) + " on new edge");
    h = next(h);
  } while (h != faces_[f].edge);
  split_face(hu, hv);
}

std::optional<std::pair<Index, Index>> Subdivision::opposite_apexes(Edge e) const {
  const auto found = find(e.u, e.v);
  if (!found) return std::nullopt;
  const Index h = *found, t = twin(h);
  if (!faces_[face_of(h)].bounded || !faces_[face_of(t)].bounded) return std::nullopt;
  if (next(next(next(h))) != h || next(next(next(t))) != t) return std::nullopt;
  return std::pair{target(next(h)), target(next(t))};
}

std::optional<Edge> Subdivision::flip(Edge e) {
  const auto apexes = opposite_apexes(e);
  if (!apexes) return std::nullopt;
  const auto [a, b] = *apexes;
  if (!segments_properly_cross(points_[e.u], points_[e.v], points_[a], points_[b])) return std::nullopt;
  const Index h = *find(e.u, e.v);
  const Index from = prev(h);          // a -> u
  const Index to = prev(twin(h));      // b -> v
  unlink(h);
  split_face(from, to);
  return make_edge(a, b);
}

EdgeSet Subdivision::edges() const {
  EdgeSet out;
  out.reserve(edge_count_);
  for (Index s = 0; s < edge_slots(); ++s)
    if (edge_alive(s)) out.push_back(make_edge(origin(2 * s), origin(2 * s + 1)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcp
