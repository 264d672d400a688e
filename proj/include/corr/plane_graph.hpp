#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "corr/error.hpp"

namespace corr {

// One face of the embedding.  The boundary is a closed walk; arcs are
// (walk[i], walk[i+1 mod L]).
struct Face {
  std::vector<int> walk;

  int length() const { return static_cast<int>(walk.size()); }
  bool contains(int v) const;
};

// Simple undirected graph with a combinatorial embedding given as a rotation
// system: a clockwise cyclic order of neighbors at every vertex.  Faces are
// derived by tracing, never part of the input.  Vertices are dense ids 1..n.
//
// Immutable after construction; safe to share across threads.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // rotations[i] is the clockwise neighbor order of vertex i+1.  Rejects
  // loops, repeated neighbors (parallel edges), asymmetric rotations and
  // rotation systems of positive genus (Euler check).
  static PlaneGraph from_rotations(const std::vector<std::vector<int>>& rotations);

  int n() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& rotation(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;
  bool has_vertex(int v) const { return v >= 1 && v <= n_; }

  const std::vector<Face>& faces() const { return faces_; }
  // Face owning the directed edge u->v.
  int face_of_arc(int u, int v) const;
  // Face at the corner of v between rotation(v)[i] and rotation(v)[i+1].
  int face_at_corner(int v, int i) const;

  int outer_face() const { return outer_face_; }
  // Re-roots the designated outer face.
  void set_outer_face(int face_id);

  // Canonical edge list, u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  int component_count() const { return components_; }
  // Component index (0-based) of each vertex, dense by first appearance.
  const std::vector<int>& component_of() const { return comp_; }

  std::vector<int> outer_vertices() const;

 private:
  void trace_faces();
  void compute_components();

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> rot_;       // 1-based
  std::vector<std::vector<int>> arc_face_;  // arc_face_[v][i] = face of (rot_[v][i] -> v)? see .cpp
  std::vector<Face> faces_;
  std::vector<int> comp_;
  int components_ = 0;
  int outer_face_ = 0;
};

// Standalone face tracing used for validation and tests: returns the face
// walks of the rotation system without constructing a full PlaneGraph.
std::vector<Face> trace_faces(const PlaneGraph& g);

// Some cycle of length in [lo, hi] if one exists; deterministic
// (lexicographically least vertex sequence among shortest qualifying cycles,
// rooted at the cycle's smallest vertex).
std::optional<std::vector<int>> shortest_cycle_in_range(const PlaneGraph& g, int lo, int hi);

// True iff a u-v path of length <= len exists in g minus the excluded set.
bool has_path_at_most(const PlaneGraph& g, int u, int v, int len, const std::set<int>& excluded);

// All simple cycles of length <= maxlen, each reported once, rooted at its
// smallest vertex with the smaller second vertex first; sorted by (length,
// vertex sequence).
std::vector<std::vector<int>> simple_cycles_up_to(const PlaneGraph& g, int maxlen);

// All triangles, sorted.
std::vector<std::array<int, 3>> triangles(const PlaneGraph& g);
bool in_triangle(const PlaneGraph& g, int u, int v);
bool vertex_in_triangle(const PlaneGraph& g, int v);

struct Block {
  std::vector<std::pair<int, int>> edges;  // canonical, sorted
  std::vector<int> verts;                  // sorted
};

// Block decomposition of the subgraph with edge set h, ordered so that each
// block meets the union of its predecessors in at most one vertex.
std::vector<Block> blocks(const PlaneGraph& g, const std::vector<std::pair<int, int>>& h);
// Same, on a bare edge list.
std::vector<Block> blocks_of_edges(const std::vector<std::pair<int, int>>& h);

// Cutvertex witness if g is not 2-connected (requires n >= 3 and connected);
// (0 reported for "disconnected").
std::optional<int> two_connectivity_defect(const PlaneGraph& g);
bool is_two_connected(const PlaneGraph& g);

// Side of each face relative to the given cycle: 0 = side of the outer face,
// 1 = the open disk side, -1 = face of another component (placement of other
// components relative to the cycle is not encoded by a rotation system).
std::vector<int> face_sides(const PlaneGraph& g, const std::vector<int>& cycle);

// Vertices strictly inside the open disk bounded by the cycle.
std::vector<int> interior_vertices(const PlaneGraph& g, const std::vector<int>& cycle);

// The boundary set S of a target: either at most one vertex incident
// with the outer face, or all vertices of the outer face.
struct BoundarySet {
  std::vector<int> verts;  // sorted, unique

  static BoundarySet of(std::vector<int> vs);
  bool contains(int v) const;
  int size() const { return static_cast<int>(verts.size()); }
  bool empty() const { return verts.empty(); }
};

}  // namespace corr
