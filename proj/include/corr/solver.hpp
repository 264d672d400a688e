#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "corr/coloring.hpp"
#include "corr/correspondence.hpp"
#include "corr/plane_graph.hpp"

namespace corr {

// A target: plane graph without 4..8-cycles, boundary set S with
// |S| <= 12, assignment consistent on closed 3-walks, precoloring of S.
struct TargetInstance {
  PlaneGraph g;
  BoundarySet s;
  CorrespondenceAssignment c;
  Coloring f0;
};

// Names every violated target invariant, with a witness.  Empty means valid.
std::vector<std::string> validate_target(const TargetInstance& inst);

// Lexicographic counterexample measure (|V|, e(B), -sum of |dom(C_uv)|).
struct InstanceMeasure {
  long long vertices = 0;
  long long edges_outside_s = 0;
  long long neg_domain_total = 0;

  auto operator<=>(const InstanceMeasure&) const = default;
};

InstanceMeasure measure(const TargetInstance& inst);

// Backtracking search for a total C-coloring extending f0.  Library mode: no
// class validation, any simple graph instance is accepted.  Deterministic:
// minimum-remaining-candidates vertex order (ties by id), ascending colors.
std::optional<Coloring> solve_core(int n, const CorrespondenceAssignment& c, const Coloring& f0);
std::optional<Coloring> solve(const TargetInstance& inst);

// Independent oracle: exact enumeration of all k^|V \ dom(f0)| extensions,
// filtered by the definitional validity check.  Throws when the instance
// exceeds the configured bounds.
std::vector<Coloring> brute_force_core(int n, const CorrespondenceAssignment& c, const Coloring& f0,
                                       int max_n = 12, int max_k = 4);
std::vector<Coloring> brute_force(const TargetInstance& inst, int max_n = 12, int max_k = 4);

// Greedy vertex-deletion shrink of an UNSAT instance: repeatedly removes
// non-precolored vertices while the instance stays UNSAT.  Plumbing aid for
// debugging, returns the surviving vertex set.
std::vector<int> shrink_unsat(int n, const CorrespondenceAssignment& c, const Coloring& f0);

}  // namespace corr
