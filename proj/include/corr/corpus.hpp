#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "corr/solver.hpp"

namespace corr {

// Constructive generators for graphs without cycles of lengths 4..8: cycles
// of length >= 9, triangles glued tree-like, and combinations.  Every
// generated graph is still validated independently by the harness.

// Ring 1..m with triangle apexes on the listed ring edges (edge i joins i and
// i+1 mod m) and an optional pendant path hanging off each apex.  Apexes sit
// on the non-outer side; the outer face is the plain ring.
PlaneGraph ring_gadget(int m, const std::vector<int>& apex_edges, const std::map<int, int>& pendants = {});

// Chain of triangles; links[j] is the path length joining triangle j to
// triangle j+1 (0 glues them at a shared vertex).
PlaneGraph triangle_chain(int t, const std::vector<int>& links);

// Two cycles of lengths a and b sharing a vertex ('v'), an edge ('e'), or
// joined by a path of length plen ('p').
PlaneGraph cycle_pair(int a, int b, char mode, int plen = 1);

// All partial injections on {1..k}, enumerated deterministically (cached).
const std::vector<PartialInjection>& all_partial_injections(int k);
PartialInjection random_partial_injection(int k, std::mt19937_64& rng);

// Independent uniform map per edge; no consistency guarantee.
CorrespondenceAssignment random_assignment(const PlaneGraph& g, int k, std::mt19937_64& rng);

// Per-edge sampling followed by triangle repair: triangles failing any of
// their six rooted closed walks are resampled until all pass (bounded).
CorrespondenceAssignment random_triangle_consistent_assignment(const PlaneGraph& g, int k, std::mt19937_64& rng,
                                                               int max_passes = 10000);

// Uniform valid C-coloring of G[S], enumerated exactly; nullopt if none.
std::optional<Coloring> sample_precoloring(const PlaneGraph& g, const BoundarySet& s,
                                           const CorrespondenceAssignment& c, std::mt19937_64& rng);

struct CorpusSpec {
  enum class Kind { RingGadget, TriangleChain, LongCycles, Mixed, Curated };
  Kind kind = Kind::Mixed;
  int max_n = 40;
  std::uint64_t seed = 1;
  // For Kind::Curated: .pg files cycled through by trial index.  A boundary
  // set embedded in the file wins over the generated one.
  std::vector<std::string> curated_files;
  // Skip the triangle repair and sample raw assignments.  Such targets fall
  // outside the consistent-on-3-walks regime; an UNSAT hit here would be a
  // counterexample candidate for the stronger, open variant of the claim,
  // not a falsification.
  bool raw_assignments = false;
};

struct TrialResult {
  int index = 0;
  std::string family;
  int n = 0, edges = 0, s_size = 0;
  bool in_class = false;
  bool sat = false;
  std::string note;
};

struct VerifySummary {
  int total = 0, sat = 0, unsat = 0, rejected = 0;
  std::vector<TrialResult> trials;
  // Any UNSAT target falsifies the colorability claim; kept verbatim.
  std::vector<TargetInstance> falsifications;
};

// Builds `trials` targets (graph in class, |S| <= 12, 3-walk-consistent
// assignment, valid sampled precoloring) and solves each.  Deterministic for
// a fixed seed, also across job counts: trial i uses its own rng stream and
// results merge by index.
VerifySummary verify_theorem(const CorpusSpec& spec, int trials, int jobs = 1);

// The target generated for one trial index (shared by verify_theorem and the
// acceptance suite).
TargetInstance corpus_target(const CorpusSpec& spec, int index, std::string* family = nullptr);

}  // namespace corr
