#include "corr/configurations.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace corr {

namespace {

std::string cycle_str(const std::vector<int>& k) {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "-" : "") + std::to_string(k[i]);
  return s;
}

std::set<std::pair<int, int>> cycle_edge_set(const std::vector<int>& k) {
  std::set<std::pair<int, int>> es;
  for (size_t i = 0; i < k.size(); ++i) {
    int a = k[i], b = k[(i + 1) % k.size()];
    es.insert({std::min(a, b), std::max(a, b)});
  }
  return es;
}

}  // namespace

Tetrad Tetrad::reversed() const {
  Tetrad r = *this;
  r.path = {path[3], path[2], path[1], path[0]};
  std::swap(r.x1, r.x4);
  std::swap(r.y1, r.y4);
  return r;
}

std::vector<CheckItem> check_basic(const PlaneGraph& g, const BoundarySet& s) {
  std::vector<CheckItem> out;

  // (a) V(G) != S
  {
    bool all_in_s = true;
    for (int v = 1; v <= g.n() && all_in_s; ++v)
      if (!s.contains(v)) all_in_s = false;
    out.push_back({'a', !all_in_s, all_in_s ? "every vertex lies in S" : ""});
  }

  // (b) 2-connected
  {
    auto defect = two_connectivity_defect(g);
    std::string w;
    if (defect) w = (*defect == 0) ? "graph is disconnected or too small" : "cutvertex " + std::to_string(*defect);
    out.push_back({'b', !defect.has_value(), w});
  }

  auto cycles = simple_cycles_up_to(g, 12);
  const Face& outer = g.faces()[g.outer_face()];
  auto outer_edges = cycle_edge_set(outer.walk);
  int outer_comp = g.component_of()[outer.walk.front()];

  // (c) no short separating cycle with a vertex inside.  Interior detection
  // needs the cycle and the outer face in one component; cycles elsewhere
  // have no defined inside and are skipped.
  {
    CheckItem item{'c', true, ""};
    for (const auto& k : cycles) {
      if (g.component_of()[k[0]] != outer_comp) continue;
      if (cycle_edge_set(k) == outer_edges) continue;
      auto inside = interior_vertices(g, k);
      if (!inside.empty()) {
        item.pass = false;
        item.witness = "cycle " + cycle_str(k) + " encloses vertex " + std::to_string(inside.front());
        break;
      }
    }
    out.push_back(item);
  }

  // (d) no two chords of a short cycle in a common triangle
  {
    CheckItem item{'d', true, ""};
    for (const auto& k : cycles) {
      auto kedges = cycle_edge_set(k);
      std::vector<std::pair<int, int>> chords;
      for (size_t i = 0; i < k.size() && item.pass; ++i)
        for (size_t j = i + 1; j < k.size(); ++j) {
          int a = std::min(k[i], k[j]), b = std::max(k[i], k[j]);
          if (g.adjacent(a, b) && !kedges.count({a, b})) chords.emplace_back(a, b);
        }
      std::sort(chords.begin(), chords.end());
      chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
      for (size_t i = 0; i < chords.size() && item.pass; ++i)
        for (size_t j = i + 1; j < chords.size() && item.pass; ++j) {
          auto [a1, b1] = chords[i];
          auto [a2, b2] = chords[j];
          // Two edges lie in a common triangle iff they share one endpoint
          // and the free endpoints are adjacent.
          int shared = 0, p = 0, q = 0;
          if (a1 == a2) shared = a1, p = b1, q = b2;
          else if (a1 == b2) shared = a1, p = b1, q = a2;
          else if (b1 == a2) shared = b1, p = a1, q = b2;
          else if (b1 == b2) shared = b1, p = a1, q = a2;
          if (shared != 0 && p != q && g.adjacent(p, q)) {
            item.pass = false;
            item.witness = "cycle " + cycle_str(k) + " has chords " + std::to_string(a1) + "-" + std::to_string(b1) +
                           " and " + std::to_string(a2) + "-" + std::to_string(b2) + " in triangle with apexes " +
                           std::to_string(p) + "," + std::to_string(q);
          }
        }
      if (!item.pass) break;
    }
    out.push_back(item);
  }

  // (e) vertices of degree <= 2 lie in S
  {
    CheckItem item{'e', true, ""};
    for (int v = 1; v <= g.n(); ++v)
      if (g.degree(v) <= 2 && !s.contains(v)) {
        item.pass = false;
        item.witness = "vertex " + std::to_string(v) + " of degree " + std::to_string(g.degree(v)) + " outside S";
        break;
      }
    out.push_back(item);
  }

  // (f) outer face bounded by an induced cycle and S = V(F)
  {
    CheckItem item{'f', true, ""};
    std::set<int> distinct(outer.walk.begin(), outer.walk.end());
    if (distinct.size() != outer.walk.size() || outer.walk.size() < 3) {
      item.pass = false;
      item.witness = "outer face boundary is not a cycle";
    } else {
      for (int u : distinct)
        for (int v : g.rotation(u))
          if (u < v && distinct.count(v) && !outer_edges.count({u, v})) {
            item.pass = false;
            item.witness = "outer cycle has chord " + std::to_string(u) + "-" + std::to_string(v);
          }
      std::vector<int> fv(distinct.begin(), distinct.end());
      if (item.pass && s.verts != fv) {
        item.pass = false;
        item.witness = "S differs from the outer face vertex set";
      }
    }
    out.push_back(item);
  }

  return out;
}

std::vector<CheckItem> check_basic(const TargetInstance& inst) { return check_basic(inst.g, inst.s); }

namespace {

// Apexes of triangles on edge (u, v), ascending.
std::vector<int> triangle_apexes(const PlaneGraph& g, int u, int v) {
  std::vector<int> out;
  for (int w : g.rotation(u))
    if (w != v && g.adjacent(w, v)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

int third_neighbor(const PlaneGraph& g, int v, int a, int b) {
  for (int w : g.rotation(v))
    if (w != a && w != b) return w;
  return 0;
}

}  // namespace

std::vector<Tetrad> find_tetrads(const PlaneGraph& g, const BoundarySet& s) {
  std::map<std::array<int, 4>, Tetrad> found;
  for (int fid = 0; fid < static_cast<int>(g.faces().size()); ++fid) {
    const auto& walk = g.faces()[fid].walk;
    int L = static_cast<int>(walk.size());
    if (L < 4) continue;
    for (int i = 0; i < L; ++i) {
      std::array<int, 4> p = {walk[i], walk[(i + 1) % L], walk[(i + 2) % L], walk[(i + 3) % L]};
      std::set<int> distinct(p.begin(), p.end());
      if (distinct.size() != 4) continue;
      bool deg3 = true;
      for (int v : p) deg3 = deg3 && g.degree(v) == 3;
      if (!deg3) continue;

      auto x1s = triangle_apexes(g, p[0], p[1]);
      auto x4s = triangle_apexes(g, p[2], p[3]);
      if (x1s.empty() || x4s.empty()) continue;

      Tetrad t;
      bool ok = false;
      for (int x1 : x1s) {
        for (int x4 : x4s) {
          int y1 = third_neighbor(g, p[0], p[1], x1);
          int y4 = third_neighbor(g, p[3], p[2], x4);
          if (y1 == 0 || y4 == 0) continue;
          std::set<int> all = {p[0], p[1], p[2], p[3], x1, x4, y1, y4};
          if (all.size() != 8) continue;
          t.path = p;
          t.x1 = x1;
          t.x4 = x4;
          t.y1 = y1;
          t.y4 = y4;
          t.face = fid;
          ok = true;
          break;
        }
        if (ok) break;
      }
      if (!ok) continue;
      if (t.path[3] < t.path[0]) t = t.reversed();
      t.disjoint_from_s = !s.contains(t.path[0]) && !s.contains(t.path[1]) && !s.contains(t.path[2]) && !s.contains(t.path[3]);
      auto it = found.find(t.path);
      if (it == found.end() || t.face < it->second.face) found[t.path] = t;
    }
  }
  std::vector<Tetrad> out;
  for (auto& [p, t] : found) out.push_back(t);
  return out;
}

std::vector<Tetrad> find_tetrads(const TargetInstance& inst) { return find_tetrads(inst.g, inst.s); }

std::vector<FullnessIssue> check_edge_fullness(const TargetInstance& inst) {
  std::vector<FullnessIssue> out;
  for (auto [u, v] : inst.c.edges()) {
    bool both_s = inst.s.contains(u) && inst.s.contains(v);
    if (both_s) continue;
    const PartialInjection m = inst.c.between(u, v);
    if (m.domain_size() <= 1) out.push_back({{u, v}, "domain-too-small"});
    if (!in_triangle(inst.g, u, v) && !m.full()) out.push_back({{u, v}, "non-triangle-not-full"});
  }
  for (auto [a, b, d] : triangles(inst.g)) {
    int deg3_outside = 0;
    for (int v : {a, b, d})
      if (inst.g.degree(v) == 3 && !inst.s.contains(v)) ++deg3_outside;
    if (deg3_outside < 2) continue;
    for (auto [u, v] : {std::pair{a, b}, std::pair{a, d}, std::pair{b, d}})
      if (!inst.c.between(u, v).full()) out.push_back({{u, v}, "triangle-edge-not-full"});
  }
  return out;
}

namespace {

std::vector<int> rotate_after(const std::vector<int>& rot, int pivot) {
  auto it = std::find(rot.begin(), rot.end(), pivot);
  if (it == rot.end()) throw Error("internal: pivot not in rotation");
  std::vector<int> out(it + 1, rot.end());
  out.insert(out.end(), rot.begin(), it + 1);
  return out;  // starts right after pivot, ends with pivot
}

}  // namespace

ReduceResult reduce_tetrad(const TargetInstance& inst, const Tetrad& t) {
  const PlaneGraph& g = inst.g;
  const auto& [v1, v2, v3, v4] = t.path;
  std::set<int> tetrad_set = {v1, v2, v3, v4};

  // Re-derive the tetrad's invariants instead of trusting the caller.
  for (int v : t.path)
    if (!g.has_vertex(v) || g.degree(v) != 3)
      throw ReduceError("tetrad-shape", "vertex " + std::to_string(v) + " missing or not of degree 3");
  for (auto [a, b] : {std::pair{v1, v2}, {v2, v3}, {v3, v4}})
    if (!g.adjacent(a, b)) throw ReduceError("tetrad-shape", "path edge " + std::to_string(a) + "-" + std::to_string(b) + " missing");
  if (!g.adjacent(t.x1, v1) || !g.adjacent(t.x1, v2) || !g.adjacent(t.x4, v3) || !g.adjacent(t.x4, v4))
    throw ReduceError("tetrad-shape", "apex triangles missing");
  std::set<int> eight = {v1, v2, v3, v4, t.x1, t.x4, t.y1, t.y4};
  if (eight.size() != 8) throw ReduceError("tetrad-shape", "the eight tetrad vertices are not pairwise distinct");

  for (int v : t.path)
    if (inst.s.contains(v))
      throw ReduceError("tetrad-meets-S", "tetrad vertex " + std::to_string(v) + " lies in S");

  // Pick the identification pair: (y1,x4) or, on the reversed tetrad,
  // (y4,x1).  Options ordered by the smaller named vertex.
  std::vector<Tetrad> options = {t, t.reversed()};
  std::sort(options.begin(), options.end(), [](const Tetrad& a, const Tetrad& b) {
    return std::minmax(a.y1, a.x4) < std::minmax(b.y1, b.x4);
  });
  const Tetrad* chosen = nullptr;
  std::string why;
  for (const Tetrad& opt : options) {
    int y = opt.y1, x = opt.x4;
    if (inst.s.contains(x)) {
      why += "option y=" + std::to_string(y) + ",x=" + std::to_string(x) + ": x in S; ";
      continue;
    }
    if (inst.s.contains(y)) {
      bool x_touches_s = false;
      for (int w : g.rotation(x)) x_touches_s = x_touches_s || inst.s.contains(w);
      if (x_touches_s) {
        why += "option y=" + std::to_string(y) + ",x=" + std::to_string(x) + ": y in S and x has an S-neighbor; ";
        continue;
      }
    }
    if (has_path_at_most(g, y, x, 8, tetrad_set)) {
      why += "option y=" + std::to_string(y) + ",x=" + std::to_string(x) + ": y-x path of length <= 8 outside the tetrad; ";
      continue;
    }
    chosen = &opt;
    break;
  }
  if (!chosen) throw ReduceError("no-identification-pair", why);
  const Tetrad& ot = *chosen;
  int keep = ot.y1, gone = ot.x4;

  // Every edge incident with the tetrad must be full, then straightened.
  std::vector<std::pair<int, int>> star;
  for (int v : ot.path)
    for (int w : g.rotation(v)) {
      auto e = std::minmax(v, w);
      if (std::find(star.begin(), star.end(), std::pair{e.first, e.second}) == star.end())
        star.push_back({e.first, e.second});
    }
  std::sort(star.begin(), star.end());
  for (auto [a, b] : star)
    if (!inst.c.between(a, b).full())
      throw ReduceError("edge-not-full", "edge " + std::to_string(a) + "-" + std::to_string(b) +
                                             " incident with the tetrad is not full");
  StraightenResult st;
  try {
    st = straighten(inst.c, star);
  } catch (const StraightenError& e) {
    throw ReduceError("straighten-failed", e.reason);
  }

  // Surgery: delete v1..v4, splice gone's rotation into keep's at the corner
  // where the removed edge sat.
  int vkeep_pivot = ot.path[0];  // keep's tetrad neighbor is v1
  int vgone_pivot = ot.path[3];  // gone's rotation is entered after v4
  std::vector<std::vector<int>> newrot(g.n());
  std::vector<int> old_to_new(g.n() + 1, 0);
  int next_id = 0;
  for (int v = 1; v <= g.n(); ++v) {
    if (tetrad_set.count(v) || v == gone) continue;
    old_to_new[v] = ++next_id;
  }
  old_to_new[gone] = old_to_new[keep];
  std::vector<int> new_to_old(next_id + 1, 0);
  for (int v = 1; v <= g.n(); ++v)
    if (old_to_new[v] != 0 && v != gone) new_to_old[old_to_new[v]] = v;

  for (int v = 1; v <= g.n(); ++v) {
    if (tetrad_set.count(v) || v == gone) continue;
    std::vector<int> r;
    if (v == keep) {
      for (int w : rotate_after(g.rotation(keep), vkeep_pivot))
        if (!tetrad_set.count(w)) r.push_back(old_to_new[w]);
      for (int w : rotate_after(g.rotation(gone), vgone_pivot))
        if (!tetrad_set.count(w)) r.push_back(old_to_new[w]);
    } else {
      for (int w : g.rotation(v))
        if (!tetrad_set.count(w)) r.push_back(old_to_new[w]);
    }
    newrot[old_to_new[v] - 1] = std::move(r);
  }
  newrot.resize(next_id);

  PlaneGraph gr;
  try {
    gr = PlaneGraph::from_rotations(newrot);
  } catch (const Error& e) {
    throw ReduceError("identification-not-planar", e.what());
  }

  // Outer face of the reduced graph: the face that still carries a surviving
  // arc of the old outer walk; longest face as a fallback.
  {
    const auto& ow = g.faces()[g.outer_face()].walk;
    for (size_t i = 0; i < ow.size(); ++i) {
      int a = ow[i], b = ow[(i + 1) % ow.size()];
      if (tetrad_set.count(a) || tetrad_set.count(b) || a == gone || b == gone) continue;
      gr.set_outer_face(gr.face_of_arc(old_to_new[a], old_to_new[b]));
      break;
    }
  }

  // Restrict the straightened assignment; gone's edges transfer to keep.
  CorrespondenceAssignment cr(inst.c.k());
  for (auto [a, b] : st.assignment.edges()) {
    if (tetrad_set.count(a) || tetrad_set.count(b)) continue;
    cr.set_edge(old_to_new[a], old_to_new[b], st.assignment.between(a, b));
  }

  BoundarySet sr;
  for (int v : inst.s.verts) sr.verts.push_back(old_to_new[v]);
  std::sort(sr.verts.begin(), sr.verts.end());

  Coloring f0s = transport_coloring(inst.f0, st.relabeling);
  Coloring f0r(gr.n());
  for (int v : inst.s.verts) f0r.set(old_to_new[v], f0s.at(v));

  TargetInstance reduced{gr, sr, cr, f0r};

  // Guarantees of the reduction, re-verified on the result.
  if (auto cyc = shortest_cycle_in_range(gr, 4, 8))
    throw ReduceError("reduction-created-short-cycle", "length " + std::to_string(cyc->size()));
  if (!is_consistent_all_triangles(cr))
    throw ReduceError("reduction-broke-3-walk-consistency", "restricted assignment inconsistent on a triangle");
  if (!coloring_valid(cr, f0r))
    throw ReduceError("reduction-broke-precoloring", "identification created a conflicting S-edge");

  ReductionPlan plan;
  plan.oriented = ot;
  plan.keep = keep;
  plan.gone = gone;
  plan.relabeling = st.relabeling;
  plan.old_to_new = old_to_new;
  plan.new_to_old = new_to_old;
  return {reduced, plan};
}

Coloring extend_coloring(const TargetInstance& original, const ReductionPlan& plan, const Coloring& reduced) {
  CorrespondenceAssignment cs = apply_relabeling(original.c, plan.relabeling);
  int n = original.g.n();
  Coloring f(n);
  for (int v = 1; v <= n; ++v)
    if (plan.old_to_new[v] != 0) f.set(v, reduced.at(plan.old_to_new[v]));

  auto ok_against_colored = [&](int v, int col) {
    for (int w : original.g.rotation(v)) {
      if (!f.colored(w)) continue;
      if (cs.between(v, w).map(col) == f.at(w)) return false;
    }
    return true;
  };

  const auto& p = plan.oriented.path;
  // v4 then v3, smallest color valid against already-colored neighbors.
  for (int v : {p[3], p[2]}) {
    int chosen = 0;
    for (int col = 1; col <= cs.k() && chosen == 0; ++col) {
      f.set(v, col);
      if (ok_against_colored(v, col)) chosen = col;
      else f.set(v, 0);
    }
    if (chosen == 0) throw Error("internal: tetrad extension stuck at vertex " + std::to_string(v));
  }
  // The pair v1, v2, first valid pair in ascending order.
  bool done = false;
  for (int a = 1; a <= cs.k() && !done; ++a)
    for (int b = 1; b <= cs.k() && !done; ++b) {
      f.set(p[0], a);
      f.set(p[1], b);
      if (ok_against_colored(p[0], a) && ok_against_colored(p[1], b) && cs.between(p[0], p[1]).map(a) != b)
        done = true;
      else {
        f.set(p[0], 0);
        f.set(p[1], 0);
      }
    }
  if (!done) throw Error("internal: tetrad extension stuck at the v1,v2 pair");

  if (!f.total() || !coloring_valid(cs, f)) throw Error("internal: extension produced an invalid coloring");
  Coloring result = transport_coloring(f, plan.relabeling.inverse());
  if (!coloring_valid(original.c, result)) throw Error("internal: extension invalid after undoing the straightening");
  return result;
}

}  // namespace corr
