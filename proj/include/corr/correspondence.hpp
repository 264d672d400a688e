#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "corr/partial_injection.hpp"

namespace corr {

// A k-correspondence assignment: one partial injection per edge.  Maps are
// stored for the canonical direction u < v only; the reverse direction is
// always the inverse, which makes C_vu = C_uv^-1 hold by construction.
class CorrespondenceAssignment {
 public:
  CorrespondenceAssignment() = default;
  explicit CorrespondenceAssignment(int k);

  int k() const { return k_; }
  bool has_edge(int u, int v) const;
  // Replaces or defines the map for edge {u,v}, interpreted in direction u->v.
  void set_edge(int u, int v, const PartialInjection& m);
  // The map in direction u->v (inverse of the stored map when u > v).
  PartialInjection between(int u, int v) const;

  // Canonical edges (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;
  const std::map<std::pair<int, int>, PartialInjection>& edge_maps() const { return maps_; }
  int max_vertex() const { return max_vertex_; }

  bool operator==(const CorrespondenceAssignment&) const = default;

 private:
  int k_ = 0;
  std::map<std::pair<int, int>, PartialInjection> maps_;
  int max_vertex_ = 0;
};

struct Walk {
  std::vector<int> verts;

  bool closed() const { return verts.size() >= 1 && verts.front() == verts.back(); }
  // Number of edges.
  int length() const { return verts.empty() ? 0 : static_cast<int>(verts.size()) - 1; }
  Walk reversed() const;
};

// C_W: composition of the edge maps along the walk, left to right.  A single
// vertex composes to the identity.  Throws on non-adjacent consecutive
// vertices (edges missing from the assignment).
PartialInjection walk_map(const CorrespondenceAssignment& c, const Walk& w);

// C_W(c) = c for every c in dom(C_W).  The walk must be closed.  Sensitive to
// the start vertex; callers that need root independence must test all roots.
bool is_consistent_on(const CorrespondenceAssignment& c, const Walk& w);

// Triangles of the assignment's edge set, sorted.
std::vector<std::array<int, 3>> assignment_triangles(const CorrespondenceAssignment& c);

// Consistent on every closed walk of length 3: all 6 rooted, directed
// traversals of every triangle.
bool is_consistent_all_triangles(const CorrespondenceAssignment& c);

// Consistent on every closed walk.  Decided exactly on the cover structure on
// V x [k] with links (u,c)-(v,C_uv(c)): consistent iff no (v,c1), (v,c2) with
// c1 != c2 share a component.
bool is_consistent_global(const CorrespondenceAssignment& c);

bool is_straight(const CorrespondenceAssignment& c, int u, int v);
bool is_full(const CorrespondenceAssignment& c, int u, int v);

}  // namespace corr
