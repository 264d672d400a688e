#include "doctest.h"

#include <functional>
#include <map>

#include "corr/corpus.hpp"
#include "corr/solver.hpp"
#include "corr/transforms.hpp"
#include "test_helpers.hpp"

using namespace corr;

namespace {

PartialInjection pi(int k, std::vector<std::pair<int, int>> ps) { return PartialInjection::from_pairs(k, ps); }

CorrespondenceAssignment pinned_triangle() {
  CorrespondenceAssignment c(3);
  c.set_edge(1, 2, pi(3, {{1, 1}, {2, 2}}));
  c.set_edge(2, 3, pi(3, {{1, 1}, {3, 3}}));
  c.set_edge(3, 1, pi(3, {{1, 1}, {2, 3}}));
  return c;
}

Relabeling swap12_at(int n, int k, int v) {
  Relabeling r = Relabeling::identity(n, k);
  r.pi[v][1] = 2;
  r.pi[v][2] = 1;
  return r;
}

// Test-local enumeration of all L-colorings: product of lists filtered by
// properness.
std::vector<std::map<int, int>> all_list_colorings(const PlaneGraph& g, const ListAssignment& la) {
  std::vector<std::map<int, int>> out;
  std::map<int, int> phi;
  std::function<void(int)> rec = [&](int v) {
    if (v > g.n()) {
      out.push_back(phi);
      return;
    }
    for (int label : la.lists[v]) {
      bool ok = true;
      for (int u : g.rotation(v))
        if (u < v && phi[u] == label) ok = false;
      if (!ok) continue;
      phi[v] = label;
      rec(v + 1);
      phi.erase(v);
    }
  };
  rec(1);
  return out;
}

}  // namespace

TEST_CASE("relabeling application and inversion") {
  CorrespondenceAssignment c(3);
  c.set_edge(1, 2, PartialInjection::identity(3));

  CHECK(apply_relabeling(c, Relabeling::identity(2, 3)) == c);

  auto r = swap12_at(2, 3, 2);
  auto c2 = apply_relabeling(c, r);
  CHECK(c2.between(1, 2) == pi(3, {{1, 2}, {2, 1}, {3, 3}}));
  CHECK(apply_relabeling(c2, r.inverse()) == c);

  // Fixed vertices are exactly those with identity permutations.
  CHECK(r.fixed_vertices() == std::vector<int>{1});
  CHECK_THROWS_AS(apply_relabeling(c, Relabeling::identity(1, 3)), Error);
}

TEST_CASE("relabeling preserves colorability and coloring counts") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    int n = 3 + static_cast<int>(rng() % 4);  // up to 6
    PlaneGraph g = random_outerplanar(n, rng);
    CorrespondenceAssignment c = random_assignment(g, 3, rng);
    Relabeling r = Relabeling::identity(n, 3);
    for (int v = 1; v <= n; ++v) {
      std::vector<int> perm{1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int col = 1; col <= 3; ++col) r.pi[v][col] = perm[col - 1];
    }
    auto c2 = apply_relabeling(c, r);
    auto before = brute_force_core(n, c, Coloring(n));
    auto after = brute_force_core(n, c2, Coloring(n));
    CHECK(before.size() == after.size());
    // Transported colorings are valid for the relabeled assignment and agree
    // on fixed vertices.
    for (const auto& f : before) {
      Coloring f2 = transport_coloring(f, r);
      CHECK(coloring_valid(c2, f2));
      for (int v : r.fixed_vertices()) CHECK(f2.at(v) == f.at(v));
    }
  }
}

TEST_CASE("transport_coloring basics") {
  Coloring f(2);
  f.set(1, 1);
  f.set(2, 3);
  CHECK(transport_coloring(f, Relabeling::identity(2, 3)) == f);
  auto r = swap12_at(2, 3, 1);
  Coloring f2 = transport_coloring(f, r);
  CHECK(f2.at(1) == 2);
  CHECK(f2.at(2) == 3);
}

TEST_CASE("straighten: forests always succeed") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 50; ++t) {
    int n = 4 + static_cast<int>(rng() % 5);
    PlaneGraph g = random_outerplanar(n, rng);
    CorrespondenceAssignment c = random_assignment(g, 3, rng);
    // Random forest: keep edges that do not close a cycle among kept ones.
    std::map<int, int> root;
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (int v = 1; v <= n; ++v) root[v] = v;
    std::vector<std::pair<int, int>> h;
    for (auto [u, v] : g.edges()) {
      if (rng() % 2) continue;
      if (find(u) == find(v)) continue;
      root[find(u)] = find(v);
      h.push_back({u, v});
    }
    auto res = straighten(c, h);
    for (auto [u, v] : h) CHECK(res.assignment.between(u, v).straight());
    // Vertices outside h are fixed.
    std::set<int> hv;
    for (auto [u, v] : h) {
      hv.insert(u);
      hv.insert(v);
    }
    for (int v = 1; v <= n; ++v)
      if (!hv.count(v)) CHECK(res.relabeling.is_identity_at(v));
    // Applying the inverse relabeling reproduces the input exactly.
    CHECK(apply_relabeling(res.assignment, res.relabeling.inverse()) == c);
    // Solvability is unchanged.
    CHECK(brute_force_core(n, c, Coloring(n)).size() == brute_force_core(n, res.assignment, Coloring(n)).size());
  }
}

TEST_CASE("straighten: full consistent cycles succeed") {
  // The 3-shift applied along all nine cycle edges composes to shift^9 = id:
  // consistent, and every edge is full.
  PlaneGraph g = make_cycle(9);
  CorrespondenceAssignment c(3);
  for (int i = 1; i <= 9; ++i) c.set_edge(i, i % 9 + 1, pi(3, {{1, 2}, {2, 3}, {3, 1}}));
  auto res = straighten(c, g.edges());
  for (auto [u, v] : g.edges()) CHECK(res.assignment.between(u, v).straight());
  CHECK(apply_relabeling(res.assignment, res.relabeling.inverse()) == c);
}

TEST_CASE("straighten rejects the pinned triangle with a cycle witness") {
  CorrespondenceAssignment c = pinned_triangle();
  std::vector<std::pair<int, int>> h = {{1, 2}, {2, 3}, {1, 3}};
  CHECK_THROWS_AS(straighten(c, h), StraightenError);
  try {
    straighten(c, h);
  } catch (const StraightenError& e) {
    REQUIRE(e.cycle.size() == 4);
    CHECK(e.cycle.front() == e.cycle.back());
    std::set<int> verts(e.cycle.begin(), e.cycle.end());
    CHECK(verts == std::set<int>{1, 2, 3});
    CHECK(e.reason.find("not full") != std::string::npos);
  }
}

TEST_CASE("straighten rejects full but inconsistent cycles") {
  CorrespondenceAssignment c4(2);
  c4.set_edge(1, 2, PartialInjection::identity(2));
  c4.set_edge(2, 3, PartialInjection::identity(2));
  c4.set_edge(3, 4, PartialInjection::identity(2));
  c4.set_edge(4, 1, pi(2, {{1, 2}, {2, 1}}));
  std::vector<std::pair<int, int>> h = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
  try {
    straighten(c4, h);
    FAIL("expected StraightenError");
  } catch (const StraightenError& e) {
    CHECK(e.reason.find("inconsistent") != std::string::npos);
    CHECK(e.cycle.front() == e.cycle.back());
  }
}

TEST_CASE("straighten: single bent edge relabels one endpoint") {
  CorrespondenceAssignment c(3);
  c.set_edge(1, 2, pi(3, {{1, 2}, {2, 1}, {3, 3}}));
  auto res = straighten(c, {{1, 2}});
  CHECK(res.assignment.between(1, 2).straight());
  CHECK(res.relabeling.is_identity_at(1));
  CHECK(!res.relabeling.is_identity_at(2));
}

TEST_CASE("saturate fills non-triangle edges outside S") {
  PlaneGraph g = ring_gadget(9, {1});  // triangle on ring edge 1-2, apex 10
  CorrespondenceAssignment c(3);
  for (auto [u, v] : g.edges()) c.set_edge(u, v, pi(3, {}));
  BoundarySet s = BoundarySet::of({4, 5});

  auto sat = saturate(c, g, s);
  for (auto [u, v] : sat.edges()) {
    bool tri = in_triangle(g, u, v);
    bool both_s = s.contains(u) && s.contains(v);
    if (tri || both_s) {
      CHECK(sat.between(u, v).domain_size() == 0);  // untouched
    } else {
      CHECK(sat.between(u, v).full());
      CHECK(sat.between(u, v) == PartialInjection::identity(3));  // empty map fills to identity
    }
  }

  // Already full: unchanged.
  CorrespondenceAssignment full(3);
  for (auto [u, v] : g.edges()) full.set_edge(u, v, PartialInjection::identity(3));
  CHECK(saturate(full, g, BoundarySet{}) == full);
}

TEST_CASE("saturate is monotone and only removes colorings") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 30; ++t) {
    PlaneGraph g = random_outerplanar(4 + static_cast<int>(rng() % 3), rng);
    CorrespondenceAssignment c = random_assignment(g, 3, rng);
    auto sat = saturate(c, g, BoundarySet{});
    for (auto [u, v] : c.edges())
      CHECK(sat.between(u, v).domain_size() >= c.between(u, v).domain_size());
    auto before = brute_force_core(g.n(), c, Coloring(g.n()));
    auto after = brute_force_core(g.n(), sat, Coloring(g.n()));
    // Every coloring of the saturated assignment is one of the original.
    std::set<std::vector<int>> before_set;
    for (const auto& f : before) before_set.insert(f.color);
    for (const auto& f : after) CHECK(before_set.count(f.color) == 1);
  }
}

TEST_CASE("from_lists construction matches the hand example") {
  // Single edge, L(u) = {1,2,3}, L(v) = {3,4,5}: only label 3 is shared and
  // q maps it to color 3 at u, color 1 at v.
  PlaneGraph g = make_path(2);
  ListAssignment la;
  la.k = 3;
  la.lists = {{}, {1, 2, 3}, {3, 4, 5}};
  auto res = from_lists(g, la);
  CHECK(res.assignment.between(1, 2) == pi(3, {{3, 1}}));
  CHECK(res.q[1] == std::vector<int>{1, 2, 3});
  CHECK(res.q[2] == std::vector<int>{3, 4, 5});

  // Identical lists give straight full edges.
  ListAssignment same;
  same.k = 3;
  same.lists = {{}, {1, 2, 3}, {1, 2, 3}};
  auto res2 = from_lists(g, same);
  CHECK(res2.assignment.between(1, 2) == PartialInjection::identity(3));

  ListAssignment ragged;
  ragged.k = 3;
  ragged.lists = {{}, {1, 2, 3}, {1, 2, 2}};
  CHECK_THROWS_AS(from_lists(g, ragged), Error);
}

TEST_CASE("from_lists output is always globally consistent") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 40; ++t) {
    int n = 3 + static_cast<int>(rng() % 4);
    PlaneGraph g = random_outerplanar(n, rng);
    ListAssignment la;
    la.k = 3;
    la.lists.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) {
      std::set<int> labels;
      while (labels.size() < 3) labels.insert(1 + static_cast<int>(rng() % 6));
      la.lists[v] = {labels.begin(), labels.end()};
    }
    auto res = from_lists(g, la);
    CHECK(is_consistent_global(res.assignment));

    // The coloring sets correspond exactly under q.
    auto phis = all_list_colorings(g, la);
    auto fs = brute_force_core(n, res.assignment, Coloring(n));
    CHECK(phis.size() == fs.size());
    std::set<std::vector<int>> phi_set;
    for (auto& phi : phis) {
      std::vector<int> key;
      for (int v = 1; v <= n; ++v) key.push_back(phi[v]);
      phi_set.insert(key);
    }
    for (const auto& f : fs) {
      std::vector<int> key;
      for (int v = 1; v <= n; ++v) key.push_back(res.q[v][f.at(v) - 1]);  // q_v^{-1}(f(v))
      CHECK(phi_set.count(key) == 1);
    }
  }
}

TEST_CASE("to_lists inverts the bridge") {
  // All edges straight and full: one class per color, all lists equal.
  PlaneGraph g = make_triangle();
  CorrespondenceAssignment c(3);
  for (auto [u, v] : g.edges()) c.set_edge(u, v, PartialInjection::identity(3));
  auto res = to_lists(g, c);
  CHECK(res.lists.lists[1] == res.lists.lists[2]);
  CHECK(res.lists.lists[2] == res.lists.lists[3]);
  CHECK(res.lists.lists[1] == std::vector<int>{1, 2, 3});

  // Edgeless graph: n*k singleton classes, disjoint lists.
  PlaneGraph iso = PlaneGraph::from_rotations({{}, {}});
  CorrespondenceAssignment none(3);
  auto res2 = to_lists(iso, none);
  std::set<int> seen(res2.lists.lists[1].begin(), res2.lists.lists[1].end());
  seen.insert(res2.lists.lists[2].begin(), res2.lists.lists[2].end());
  CHECK(seen.size() == 6);

  // Inconsistent input is a precondition violation.
  CorrespondenceAssignment bad(2);
  bad.set_edge(1, 2, PartialInjection::identity(2));
  bad.set_edge(2, 3, PartialInjection::identity(2));
  bad.set_edge(3, 1, pi(2, {{1, 2}, {2, 1}}));
  CHECK_THROWS_AS(to_lists(make_triangle(), bad), Error);
}

TEST_CASE("round trip to_lists after from_lists preserves coloring sets") {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 25; ++t) {
    int n = 3 + static_cast<int>(rng() % 3);  // up to 5
    PlaneGraph g = random_outerplanar(n, rng);
    ListAssignment la;
    la.k = 3;
    la.lists.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) {
      std::set<int> labels;
      while (labels.size() < 3) labels.insert(1 + static_cast<int>(rng() % 5));
      la.lists[v] = {labels.begin(), labels.end()};
    }
    auto fw = from_lists(g, la);
    auto back = to_lists(g, fw.assignment);
    // Both list instances describe the same constraint structure.
    CHECK(all_list_colorings(g, la).size() == all_list_colorings(g, back.lists).size());
    // ell really labels the classes: transporting every C-coloring through
    // ell yields a proper coloring from the new lists.
    for (const auto& f : brute_force_core(n, fw.assignment, Coloring(n))) {
      std::map<int, int> phi;
      for (int v = 1; v <= n; ++v) phi[v] = back.ell[v][f.at(v)];
      for (int v = 1; v <= n; ++v)
        for (int u : g.rotation(v))
          if (u < v) CHECK(phi[u] != phi[v]);
    }
  }
}
