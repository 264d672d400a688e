#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corr/coloring.hpp"
#include "corr/correspondence.hpp"
#include "corr/plane_graph.hpp"

namespace corr {

// Per-vertex color permutations relating equivalent assignments.  A vertex
// with the identity permutation is fixed.
struct Relabeling {
  int k = 0;
  std::vector<std::vector<int>> pi;  // pi[v][c], both indices 1-based

  static Relabeling identity(int n, int k);
  int n() const { return static_cast<int>(pi.size()) - 1; }
  bool is_identity_at(int v) const;
  std::vector<int> fixed_vertices() const;
  Relabeling inverse() const;
};

// The equivalent assignment with pairs (a,b) of C_uv renamed to
// (pi_u(a), pi_v(b)).  Applying a relabeling and then its inverse returns the
// original assignment.
CorrespondenceAssignment apply_relabeling(const CorrespondenceAssignment& c, const Relabeling& r);

// f'(v) = pi_v(f(v)); uncolored vertices stay uncolored.  Sends C-colorings
// to colorings of the relabeled assignment and agrees with f on fixed
// vertices.
Coloring transport_coloring(const Coloring& f, const Relabeling& r);

struct StraightenError : Error {
  std::vector<int> cycle;  // closed walk witness, first == last
  std::string reason;
  StraightenError(std::vector<int> cycle_, const std::string& reason_);
};

struct StraightenResult {
  CorrespondenceAssignment assignment;
  Relabeling relabeling;
};

// Straightens every edge of h by renaming colors, leaving all vertices
// outside h fixed.  Requires (checked): on every cycle of h the assignment is
// consistent and every edge is full.  Throws StraightenError with an
// offending cycle otherwise.
//
// Blocks of h are processed in an order where each meets its predecessors in
// at most one vertex; within a block, vertices are renamed along a BFS
// spanning tree from the attachment vertex (smallest vertex for a fresh
// block), neighbors in ascending order.
StraightenResult straighten(const CorrespondenceAssignment& c, const std::vector<std::pair<int, int>>& h);

// Hardening rewrite: adds pairs to every non-triangle edge not joining two
// S-vertices until it is full (smallest spare source, then smallest spare
// target).  Any coloring of the result is a coloring of the input.
CorrespondenceAssignment saturate(const CorrespondenceAssignment& c, const PlaneGraph& g, const BoundarySet& s);

// Lists of size k of abstract integer labels, per vertex.
struct ListAssignment {
  int k = 0;
  std::vector<std::vector<int>> lists;  // index 0 unused

  int n() const { return static_cast<int>(lists.size()) - 1; }
};

struct FromListsResult {
  CorrespondenceAssignment assignment;
  // q[v] is L(v) sorted; q_v maps label q[v][i-1] to color i.
  std::vector<std::vector<int>> q;
};

// The list-coloring reduction: C_uv(q_u(c)) = q_v(c) for c in L(u) n L(v).
// The output is globally consistent, and f is a C-coloring iff
// v -> q_v^-1(f(v)) is an L-coloring.
FromListsResult from_lists(const PlaneGraph& g, const ListAssignment& la);

struct ToListsResult {
  ListAssignment lists;
  // ell[v][c] = class label of (v, c), c 1-based.
  std::vector<std::vector<int>> ell;
};

// Inverse bridge for consistent assignments: numbers the components of the
// cover structure and lists them per vertex.  Requires is_consistent_global.
ToListsResult to_lists(const PlaneGraph& g, const CorrespondenceAssignment& c);

}  // namespace corr
