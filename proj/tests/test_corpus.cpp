#include "doctest.h"

#include "corr/corpus.hpp"
#include "test_helpers.hpp"

using namespace corr;

namespace {
std::vector<int> face_lengths(const PlaneGraph& g) {
  std::vector<int> ls;
  for (const auto& f : g.faces()) ls.push_back(f.length());
  std::sort(ls.begin(), ls.end());
  return ls;
}
}  // namespace

TEST_CASE("ring gadget shape") {
  // C9 with one apex triangle: faces 3, 9 (outer ring), 10.
  PlaneGraph g = ring_gadget(9, {1});
  CHECK(g.n() == 10);
  CHECK(face_lengths(g) == std::vector<int>{3, 9, 10});
  CHECK(g.faces()[g.outer_face()].length() == 9);
  CHECK(!shortest_cycle_in_range(g, 4, 8).has_value());

  // Two apexes with pendants; still in class, outer face still the ring.
  PlaneGraph h = ring_gadget(9, {1, 4}, {{1, 2}, {4, 1}});
  CHECK(h.n() == 9 + 2 + 3);
  CHECK(!shortest_cycle_in_range(h, 4, 8).has_value());
  CHECK(h.faces()[h.outer_face()].length() == 9);
  CHECK(h.degree(10) == 3);  // apex with pendant
  CHECK_THROWS_AS(ring_gadget(8, {}), Error);
}

TEST_CASE("triangle chains stay in class") {
  PlaneGraph g = triangle_chain(3, {0, 2});
  CHECK(!shortest_cycle_in_range(g, 4, 8).has_value());
  auto t3 = shortest_cycle_in_range(g, 3, 3);
  CHECK(t3.has_value());
  CHECK(g.component_count() == 1);

  // Two triangles sharing one vertex. 5 vertices, 6 edges, 3 faces.
  PlaneGraph bow = triangle_chain(2, {0});
  CHECK(bow.n() == 5);
  CHECK(bow.edge_count() == 6);
  CHECK(face_lengths(bow) == std::vector<int>{3, 3, 6});
}

TEST_CASE("cycle pairs stay in class") {
  PlaneGraph sv = cycle_pair(9, 9, 'v');
  CHECK(sv.n() == 17);
  CHECK(face_lengths(sv) == std::vector<int>{9, 9, 18});
  CHECK(!shortest_cycle_in_range(sv, 4, 8).has_value());

  PlaneGraph se = cycle_pair(9, 10, 'e');
  CHECK(se.n() == 17);
  CHECK(se.edge_count() == 18);
  CHECK(face_lengths(se) == std::vector<int>{9, 10, 17});
  CHECK(!shortest_cycle_in_range(se, 4, 8).has_value());

  PlaneGraph sp = cycle_pair(9, 9, 'p', 2);
  CHECK(sp.n() == 19);
  CHECK(!shortest_cycle_in_range(sp, 4, 8).has_value());
}

TEST_CASE("partial injection enumeration counts") {
  // sum over d of C(k,d)^2 d!: k=2 -> 7, k=3 -> 34.
  CHECK(all_partial_injections(2).size() == 7);
  CHECK(all_partial_injections(3).size() == 34);
  std::set<std::vector<std::pair<int, int>>> distinct;
  for (const auto& m : all_partial_injections(3)) distinct.insert(m.pairs());
  CHECK(distinct.size() == 34);
}

TEST_CASE("random consistent assignments pass the triangle sweep") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    PlaneGraph g = ring_gadget(9, {1, 3, 5});
    auto c = random_triangle_consistent_assignment(g, 3, rng);
    CHECK(is_consistent_all_triangles(c));
    CHECK(c.edges() == g.edges());
  }
}

TEST_CASE("precoloring sampler returns valid colorings of G[S]") {
  std::mt19937_64 rng(10);
  PlaneGraph g = ring_gadget(10, {2});
  BoundarySet s = BoundarySet::of(g.outer_vertices());
  auto c = random_triangle_consistent_assignment(g, 3, rng);
  for (int t = 0; t < 5; ++t) {
    auto f0 = sample_precoloring(g, s, c, rng);
    REQUIRE(f0.has_value());
    CHECK(coloring_valid(c, *f0));
    CHECK(f0->domain() == s.verts);
  }
}

TEST_CASE("curated corpus: classic members are SAT across sampled assignments") {
  CorpusSpec spec;
  spec.kind = CorpusSpec::Kind::Curated;
  spec.seed = 123;
  std::string base = CORR_DATA_DIR;
  spec.curated_files = {base + "/triangle.pg", base + "/c9.pg", base + "/c13.pg", base + "/tetrad1.pg"};
  VerifySummary sum = verify_theorem(spec, 100, 2);
  CHECK(sum.total == 100);
  CHECK(sum.sat == 100);
  CHECK(sum.unsat == 0);
  CHECK(sum.rejected == 0);
}

TEST_CASE("raw-assignment mode probes beyond the consistent regime") {
  CorpusSpec spec;
  spec.seed = 321;
  spec.raw_assignments = true;
  VerifySummary a = verify_theorem(spec, 25, 1);
  VerifySummary b = verify_theorem(spec, 25, 3);
  CHECK(a.total == 25);
  CHECK(a.rejected == 0);
  // No claim is made about UNSAT counts here; any hit would be a candidate
  // for the open stronger statement.  Determinism across job counts still
  // holds.
  for (size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].sat == b.trials[i].sat);
    CHECK(a.trials[i].n == b.trials[i].n);
  }
}

TEST_CASE("corpus targets validate and the harness is reproducible") {
  CorpusSpec spec;
  spec.seed = 77;
  for (int i = 0; i < 12; ++i) {
    TargetInstance inst = corpus_target(spec, i);
    CAPTURE(i);
    CHECK(validate_target(inst).empty());
  }
  VerifySummary a = verify_theorem(spec, 20, 1);
  VerifySummary b = verify_theorem(spec, 20, 4);
  CHECK(a.total == 20);
  CHECK(a.sat == 20);
  CHECK(a.unsat == 0);
  CHECK(a.rejected == 0);
  REQUIRE(a.trials.size() == b.trials.size());
  for (size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].family == b.trials[i].family);
    CHECK(a.trials[i].sat == b.trials[i].sat);
    CHECK(a.trials[i].n == b.trials[i].n);
  }
}
