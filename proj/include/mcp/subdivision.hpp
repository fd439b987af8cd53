#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mcp/edge.hpp"
#include "mcp/geometry.hpp"

namespace mcp {

struct Counts {
  std::size_t n = 0;  // vertices
  std::size_t m = 0;  // undirected edges
  std::size_t f = 0;  // bounded faces

  friend bool operator==(const Counts&, const Counts&) = default;
};

enum class MergeVerdict { Removable, BordersOuterFace, SameFace, ReflexMerge };

/// Half-edge plane subdivision over a fixed point set.
///
/// Half-edges 2e and 2e+1 are twins and belong to edge slot e. Bounded faces
/// are traversed counterclockwise with the interior on the left; cycles with
/// non-positive signed area (the outer boundary of each component, or a
/// degenerate tree) are unbounded. Removed slots are recycled on insertion.
class Subdivision {
 public:
  static constexpr Index kNone = -1;

  struct HalfEdge {
    Index origin = kNone;
    Index next = kNone;
    Index prev = kNone;
    Index face = kNone;
  };

  struct Face {
    Index edge = kNone;  // any half-edge on the cycle
    bool bounded = false;
    bool alive = false;
  };

  /// Validates indices, duplicates, crossings and points on edges.
  /// Throws Error(BadIndex | DuplicateEdge | CrossingEdges | PointOnEdge).
  static Subdivision build(std::span<const Point> points, std::span<const Edge> edges);

  /// Skips the geometric validation; the edge set must already be a plane
  /// straight-line graph without duplicates.
  static Subdivision build_trusted(std::span<const Point> points, std::span<const Edge> edges);

  static Index twin(Index h) { return h ^ 1; }

  const HalfEdge& half_edge(Index h) const { return half_edges_[h]; }
  Index origin(Index h) const { return half_edges_[h].origin; }
  Index target(Index h) const { return half_edges_[twin(h)].origin; }
  Index next(Index h) const { return half_edges_[h].next; }
  Index prev(Index h) const { return half_edges_[h].prev; }
  Index face_of(Index h) const { return half_edges_[h].face; }
  const Point& point(Index v) const { return points_[v]; }
  std::span<const Point> points() const { return points_; }

  const Face& face(Index f) const { return faces_[f]; }
  Index face_slots() const { return Index(faces_.size()); }
  Index edge_slots() const { return Index(half_edges_.size() / 2); }
  bool edge_alive(Index slot) const { return half_edges_[2 * slot].origin != kNone; }

  /// Half-edge from u to v, if the edge exists.
  std::optional<Index> find(Index u, Index v) const;
  bool contains(Edge e) const { return find(e.u, e.v).has_value(); }

  std::size_t degree(Index v) const { return degree_[v]; }
  /// Outgoing half-edges of v in counterclockwise order.
  std::vector<Index> outgoing(Index v) const;

  Counts counts() const { return {points_.size(), edge_count_, bounded_count_}; }
  std::vector<Index> live_faces() const;
  std::vector<Index> face_vertices(Index f) const;
  std::size_t face_size(Index f) const;
  Wide face_twice_area(Index f) const;

  /// Every consecutive boundary triple of a bounded face turns by at most pi.
  bool face_is_convex(Index f) const;

  /// A hull edge borders the unbounded face.
  bool is_boundary_edge(Edge e) const;

  /// Whether deleting e merges two bounded faces into a convex face. Does not mutate.
  /// Throws Error(UnknownEdge).
  MergeVerdict merge_preview(Edge e) const;

  /// Deletes e; requires merge_preview(e) == Removable (Error(NotRemovable) otherwise).
  void remove_edge(Edge e);

  /// Deletes e without the convexity check; the faces on its two sides must differ.
  /// Throws Error(UnknownEdge | NotRemovable).
  void erase_edge(Edge e);

  /// Adds the segment uv inside a face it splits in two. Both endpoints must
  /// already have positive degree and lie on the boundary of that face.
  /// Throws Error(DuplicateEdge | CrossingEdges).
  void insert_edge(Edge e);

  /// Replaces the diagonal of the strictly convex quadrilateral formed by the
  /// two triangles incident to e. Returns the new edge, or nullopt if e is not
  /// flippable (hull edge, non-triangle face, or non-convex quadrilateral).
  std::optional<Edge> flip(Edge e);

  /// Apexes opposite e in the faces left of u->v and v->u (triangles only).
  std::optional<std::pair<Index, Index>> opposite_apexes(Edge e) const;

  /// Live edges, canonical and sorted.
  EdgeSet edges() const;

 private:
  Subdivision() = default;
  static Subdivision assemble(std::span<const Point> points, std::span<const Edge> edges);

  Index new_slot();
  void unlink(Index h);  // merge the faces on both sides of h's edge
  Index split_face(Index from, Index to);  // from/to are half-edges on the same face
  Index wedge_for(Index v, Coord dx, Coord dy) const;  // outgoing half-edge whose face contains direction
  void relabel(Index start, Index f);

  std::vector<Point> points_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
  std::vector<Index> vertex_edge_;  // some outgoing half-edge, or kNone
  std::vector<std::size_t> degree_;
  std::vector<Index> free_slots_;
  std::vector<Index> free_faces_;
  std::unordered_map<std::uint64_t, Index> lookup_;  // edge key -> half-edge from smaller index
  std::size_t edge_count_ = 0;
  std::size_t bounded_count_ = 0;
};

}  // namespace mcp
