#pragma once

#include <array>
#include <string>
#include <vector>

#include "corr/solver.hpp"
#include "corr/transforms.hpp"

namespace corr {

// Facial path v1v2v3v4 of degree-3 vertices whose end edges lie in triangles.
struct Tetrad {
  std::array<int, 4> path;  // v1 v2 v3 v4
  int x1 = 0, x4 = 0;       // apexes of the triangles on v1v2 and v3v4
  int y1 = 0, y4 = 0;       // remaining neighbors of v1 and v4
  int face = 0;             // host face id
  bool disjoint_from_s = false;

  Tetrad reversed() const;
};

// One diagnostic item of the minimal-counterexample checklist (a)-(f).
// These constrain hypothetical minimal counterexamples; real instances may
// fail them freely.
struct CheckItem {
  char id;
  bool pass;
  std::string witness;
};

std::vector<CheckItem> check_basic(const PlaneGraph& g, const BoundarySet& s);
std::vector<CheckItem> check_basic(const TargetInstance& inst);

// All tetrads, canonically oriented (v1 < v4), sorted by path.
std::vector<Tetrad> find_tetrads(const PlaneGraph& g, const BoundarySet& s);
std::vector<Tetrad> find_tetrads(const TargetInstance& inst);

// Edge-domain conditions a minimal counterexample cannot exhibit.
struct FullnessIssue {
  std::pair<int, int> edge;
  std::string kind;  // "domain-too-small" | "non-triangle-not-full" | "triangle-edge-not-full"
};

std::vector<FullnessIssue> check_edge_fullness(const TargetInstance& inst);

struct ReduceError : Error {
  std::string condition;  // the violated precondition, by name
  ReduceError(const std::string& condition_, const std::string& msg)
      : Error(condition_ + ": " + msg), condition(condition_) {}
};

// Everything needed to map colorings of the reduced instance back.
struct ReductionPlan {
  Tetrad oriented;              // roles as used (possibly the reversed tetrad)
  int keep = 0;                 // y-vertex that absorbs...
  int gone = 0;                 // ...the x-vertex identified with it
  Relabeling relabeling;        // straightening relabeling applied to the original
  std::vector<int> old_to_new;  // 0 for deleted vertices; gone maps to keep's id
  std::vector<int> new_to_old;  // representative old id per new id
};

struct ReduceResult {
  TargetInstance reduced;
  ReductionPlan plan;
};

// The tetrad reduction: straightens the star of the tetrad, deletes v1..v4,
// identifies the y/x pair chosen by the precondition search, restricts the
// assignment, and re-verifies class membership of the result.  The reduced
// precoloring is f0 transported along the straightening relabeling (identical
// off the straightened star).  Throws ReduceError naming the first violated
// precondition.
ReduceResult reduce_tetrad(const TargetInstance& inst, const Tetrad& t);

// Extends a coloring of the reduced instance to a C-coloring of the original:
// survivors copy their colors (gone takes keep's), then v4, v3 greedily, then
// the pair v1, v2; finally the straightening is undone.
Coloring extend_coloring(const TargetInstance& original, const ReductionPlan& plan, const Coloring& reduced);

}  // namespace corr
