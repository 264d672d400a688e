#include "corr/solver.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace corr {

namespace {

struct EdgeView {
  int to;
  std::vector<int> forbid;  // forbid[a] = color banned at `to` when this end gets a, 0 = none
};

// forbid tables for both arc directions of every assignment edge
std::vector<std::vector<EdgeView>> make_adjacency(int n, const CorrespondenceAssignment& c) {
  std::vector<std::vector<EdgeView>> adj(n + 1);
  for (const auto& [e, m] : c.edge_maps()) {
    auto [u, v] = e;
    if (u > n || v > n) throw Error("assignment references vertex " + std::to_string(std::max(u, v)) +
                                    " beyond n=" + std::to_string(n));
    EdgeView uv{v, std::vector<int>(c.k() + 1, 0)};
    EdgeView vu{u, std::vector<int>(c.k() + 1, 0)};
    for (auto [a, b] : m.pairs()) {
      uv.forbid[a] = b;
      vu.forbid[b] = a;
    }
    adj[u].push_back(std::move(uv));
    adj[v].push_back(std::move(vu));
  }
  return adj;
}

bool precoloring_conflicts(const std::vector<std::vector<EdgeView>>& adj, const Coloring& f0, int n) {
  for (int v = 1; v <= n; ++v) {
    if (!f0.colored(v)) continue;
    for (const auto& ev : adj[v])
      if (f0.colored(ev.to) && ev.forbid[f0.at(v)] == f0.at(ev.to)) return true;
  }
  return false;
}

}  // namespace

std::optional<Coloring> solve_core(int n, const CorrespondenceAssignment& c, const Coloring& f0) {
  int k = c.k();
  if (k > 30) throw Error("k too large for solver");
  auto adj = make_adjacency(n, c);
  if (f0.n() > n) throw Error("precoloring covers more vertices than the instance");
  for (int v = 1; v <= f0.n(); ++v)
    if (f0.colored(v) && (f0.at(v) < 1 || f0.at(v) > k)) throw Error("precoloring color out of range at vertex " + std::to_string(v));
  if (precoloring_conflicts(adj, f0, std::min(n, f0.n()))) return std::nullopt;

  const unsigned full = (1u << k) - 1u;
  std::vector<unsigned> cand(n + 1, full);
  std::vector<int> color(n + 1, 0);
  int uncolored = n;
  for (int v = 1; v <= std::min(n, f0.n()); ++v)
    if (f0.colored(v)) {
      color[v] = f0.at(v);
      --uncolored;
    }

  // (vertex, removed-bit) undo entries per decision level
  std::vector<std::vector<std::pair<int, unsigned>>> trail;
  auto prune = [&](int v, int a) -> bool {
    for (const auto& ev : adj[v]) {
      if (color[ev.to] != 0) {
        if (ev.forbid[a] == color[ev.to]) return false;
        continue;
      }
      int b = ev.forbid[a];
      if (b == 0) continue;
      unsigned bit = 1u << (b - 1);
      if (cand[ev.to] & bit) {
        cand[ev.to] &= ~bit;
        trail.back().emplace_back(ev.to, bit);
        if (cand[ev.to] == 0) return false;
      }
    }
    return true;
  };

  // Seed propagation from the precoloring.
  trail.emplace_back();
  for (int v = 1; v <= n; ++v)
    if (color[v] != 0 && !prune(v, color[v])) return std::nullopt;

  std::vector<int> decisions;
  while (uncolored > 0) {
    // Minimum remaining candidates, ties by vertex id.
    int pick = 0, best = k + 1;
    for (int v = 1; v <= n; ++v)
      if (color[v] == 0 && std::popcount(cand[v]) < best) {
        best = std::popcount(cand[v]);
        pick = v;
      }
    int from = 1;
    bool advanced = false;
    while (true) {
      int a = 0;
      for (int col = from; col <= k; ++col)
        if (cand[pick] & (1u << (col - 1))) {
          a = col;
          break;
        }
      if (a != 0) {
        trail.emplace_back();
        color[pick] = a;
        --uncolored;
        if (prune(pick, a)) {
          decisions.push_back(pick);
          advanced = true;
          break;
        }
        // Undo the failed attempt, try the next color.
        for (auto [w, bit] : trail.back()) cand[w] |= bit;
        trail.pop_back();
        color[pick] = 0;
        ++uncolored;
        from = a + 1;
        continue;
      }
      // Exhausted: backtrack to the previous decision.
      if (decisions.empty()) return std::nullopt;
      int prev = decisions.back();
      decisions.pop_back();
      for (auto [w, bit] : trail.back()) cand[w] |= bit;
      trail.pop_back();
      int tried = color[prev];
      color[prev] = 0;
      ++uncolored;
      pick = prev;
      from = tried + 1;
    }
    (void)advanced;
  }

  Coloring f(n);
  for (int v = 1; v <= n; ++v) f.set(v, color[v]);
  return f;
}

std::optional<Coloring> solve(const TargetInstance& inst) { return solve_core(inst.g.n(), inst.c, inst.f0); }

std::vector<Coloring> brute_force_core(int n, const CorrespondenceAssignment& c, const Coloring& f0, int max_n,
                                       int max_k) {
  if (n > max_n) throw Error("brute force bound exceeded: n=" + std::to_string(n) + " > " + std::to_string(max_n));
  if (c.k() > max_k) throw Error("brute force bound exceeded: k=" + std::to_string(c.k()));
  auto adj = make_adjacency(n, c);
  if (precoloring_conflicts(adj, f0, std::min(n, f0.n()))) return {};

  std::vector<int> free_verts;
  Coloring f(n);
  for (int v = 1; v <= n; ++v) {
    int pre = (v <= f0.n()) ? f0.at(v) : 0;
    if (pre != 0)
      f.set(v, pre);
    else
      free_verts.push_back(v);
  }
  std::vector<Coloring> out;
  std::vector<int> odo(free_verts.size(), 1);
  while (true) {
    for (size_t i = 0; i < free_verts.size(); ++i) f.set(free_verts[i], odo[i]);
    if (coloring_valid(c, f)) out.push_back(f);
    size_t i = 0;
    for (; i < odo.size(); ++i) {
      if (odo[i] < c.k()) {
        ++odo[i];
        break;
      }
      odo[i] = 1;
    }
    if (i == odo.size()) break;
    if (odo.empty()) break;
  }
  if (free_verts.empty() && out.empty() && coloring_valid(c, f)) out.push_back(f);
  return out;
}

std::vector<Coloring> brute_force(const TargetInstance& inst, int max_n, int max_k) {
  return brute_force_core(inst.g.n(), inst.c, inst.f0, max_n, max_k);
}

std::vector<std::string> validate_target(const TargetInstance& inst) {
  std::vector<std::string> bad;
  auto ge = inst.g.edges();
  auto ce = inst.c.edges();
  if (ge != ce) bad.push_back("assignment edge set differs from graph edge set");
  if (inst.c.max_vertex() > inst.g.n()) bad.push_back("assignment references vertices beyond the graph");

  if (auto cyc = shortest_cycle_in_range(inst.g, 4, 8)) {
    std::string w = "graph has a cycle of length " + std::to_string(cyc->size()) + ":";
    for (int v : *cyc) w += " " + std::to_string(v);
    bad.push_back(w);
  }

  for (int v : inst.s.verts)
    if (!inst.g.has_vertex(v)) bad.push_back("S contains unknown vertex " + std::to_string(v));
  if (inst.s.size() > 12) bad.push_back("|S| = " + std::to_string(inst.s.size()) + " exceeds 12");
  std::vector<int> outer = inst.g.outer_vertices();
  if (inst.s.size() == 1) {
    if (!std::binary_search(outer.begin(), outer.end(), inst.s.verts[0]))
      bad.push_back("S-vertex " + std::to_string(inst.s.verts[0]) + " is not incident with the outer face");
  } else if (inst.s.size() > 1 && inst.s.verts != outer) {
    bad.push_back("S is neither a single outer vertex nor the full outer face boundary");
  }

  if (!is_consistent_all_triangles(inst.c)) bad.push_back("assignment inconsistent on a closed walk of length 3");

  if (inst.f0.n() != inst.g.n()) bad.push_back("precoloring sized for a different vertex count");
  for (int v = 1; v <= std::min(inst.f0.n(), inst.g.n()); ++v) {
    bool in_s = inst.s.contains(v);
    if (inst.f0.colored(v) && !in_s) bad.push_back("precoloring colors non-S vertex " + std::to_string(v));
    if (!inst.f0.colored(v) && in_s) bad.push_back("S-vertex " + std::to_string(v) + " not precolored");
    if (inst.f0.colored(v) && (inst.f0.at(v) < 1 || inst.f0.at(v) > inst.c.k()))
      bad.push_back("precoloring color out of range at vertex " + std::to_string(v));
  }
  if (!coloring_valid(inst.c, inst.f0)) bad.push_back("precoloring is not a valid C-coloring of G[S]");
  return bad;
}

InstanceMeasure measure(const TargetInstance& inst) {
  InstanceMeasure m;
  m.vertices = inst.g.n();
  long long inside_s = 0, dom_total = 0;
  for (const auto& [e, pm] : inst.c.edge_maps()) {
    if (inst.s.contains(e.first) && inst.s.contains(e.second)) ++inside_s;
    dom_total += pm.domain_size();
  }
  m.edges_outside_s = static_cast<long long>(inst.c.edge_maps().size()) - inside_s;
  m.neg_domain_total = -dom_total;
  return m;
}

std::vector<int> shrink_unsat(int n, const CorrespondenceAssignment& c, const Coloring& f0) {
  if (solve_core(n, c, f0)) throw Error("shrink_unsat requires an UNSAT instance");
  std::set<int> alive;
  for (int v = 1; v <= n; ++v) alive.insert(v);
  auto restricted = [&](const std::set<int>& vs) {
    CorrespondenceAssignment sub(c.k());
    for (const auto& [e, m] : c.edge_maps())
      if (vs.count(e.first) && vs.count(e.second)) sub.set_edge(e.first, e.second, m);
    return sub;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= n; ++v) {
      if (!alive.count(v) || (v <= f0.n() && f0.colored(v))) continue;
      std::set<int> trial = alive;
      trial.erase(v);
      CorrespondenceAssignment sub = restricted(trial);
      if (sub.edge_maps().empty()) continue;
      if (!solve_core(n, sub, f0)) {
        alive = trial;
        changed = true;
      }
    }
  }
  return {alive.begin(), alive.end()};
}

}  // namespace corr
