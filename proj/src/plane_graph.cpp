#include "corr/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <queue>

namespace corr {

bool Face::contains(int v) const {
  return std::find(walk.begin(), walk.end(), v) != walk.end();
}

PlaneGraph PlaneGraph::from_rotations(const std::vector<std::vector<int>>& rotations) {
  PlaneGraph g;
  g.n_ = static_cast<int>(rotations.size());
  if (g.n_ < 1) throw Error("graph needs at least one vertex");
  g.rot_.assign(g.n_ + 1, {});
  for (int v = 1; v <= g.n_; ++v) g.rot_[v] = rotations[v - 1];

  // Simplicity and symmetry of the rotation system.
  long long arc_count = 0;
  for (int v = 1; v <= g.n_; ++v) {
    std::set<int> seen;
    for (int u : g.rot_[v]) {
      if (u < 1 || u > g.n_) throw Error("vertex " + std::to_string(v) + ": neighbor " + std::to_string(u) + " out of range");
      if (u == v) throw Error("loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        throw Error("parallel edge " + std::to_string(v) + "-" + std::to_string(u) + " (neighbor repeated in rotation)");
      ++arc_count;
    }
  }
  for (int v = 1; v <= g.n_; ++v)
    for (int u : g.rot_[v]) {
      const auto& r = g.rot_[u];
      if (std::find(r.begin(), r.end(), v) == r.end())
        throw Error("asymmetric rotation: " + std::to_string(u) + " missing from rotation of... " + std::to_string(v) +
                    " appears at " + std::to_string(v) + " but not vice versa");
    }
  if (arc_count % 2 != 0) throw Error("odd arc count");
  g.m_ = static_cast<int>(arc_count / 2);

  g.compute_components();
  g.trace_faces();

  // Per-component Euler check: every component with an edge must satisfy
  // V - E + F = 2 on its own sphere.  A rotation system of positive genus
  // fails this and is rejected.
  {
    std::vector<long long> vcnt(g.components_, 0), ecnt(g.components_, 0), fcnt(g.components_, 0);
    for (int v = 1; v <= g.n_; ++v) {
      ++vcnt[g.comp_[v]];
      ecnt[g.comp_[v]] += g.rot_[v].size();
    }
    for (const Face& f : g.faces_) ++fcnt[g.comp_[f.walk.front()]];
    for (int cidx = 0; cidx < g.components_; ++cidx) {
      if (ecnt[cidx] == 0) continue;
      long long euler = vcnt[cidx] - ecnt[cidx] / 2 + fcnt[cidx];
      if (euler != 2)
        throw Error("rotation system is not planar: component has V-E+F = " + std::to_string(euler));
    }
  }

  // Default outer face: longest boundary walk, ties by trace order.
  int best = 0;
  for (int f = 0; f < static_cast<int>(g.faces_.size()); ++f)
    if (g.faces_[f].length() > g.faces_[best].length()) best = f;
  g.outer_face_ = g.faces_.empty() ? 0 : best;
  return g;
}

void PlaneGraph::compute_components() {
  comp_.assign(n_ + 1, -1);
  components_ = 0;
  for (int s = 1; s <= n_; ++s) {
    if (comp_[s] != -1) continue;
    comp_[s] = components_;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : rot_[v])
        if (comp_[u] == -1) {
          comp_[u] = components_;
          q.push_back(u);
        }
    }
    ++components_;
  }
}

namespace {
int index_in(const std::vector<int>& rot, int u) {
  for (int i = 0; i < static_cast<int>(rot.size()); ++i)
    if (rot[i] == u) return i;
  return -1;
}
}  // namespace

void PlaneGraph::trace_faces() {
  faces_.clear();
  arc_face_.assign(n_ + 1, {});
  for (int v = 1; v <= n_; ++v) arc_face_[v].assign(rot_[v].size(), -1);

  // Next arc after (u -> v) is (v -> w) with w the successor of u in the
  // rotation of v.  Every directed edge lies on exactly one face walk.
  for (int v0 = 1; v0 <= n_; ++v0) {
    for (int i0 = 0; i0 < static_cast<int>(rot_[v0].size()); ++i0) {
      if (arc_face_[v0][i0] != -1) continue;
      int id = static_cast<int>(faces_.size());
      Face face;
      int u = v0, i = i0;
      do {
        arc_face_[u][i] = id;
        face.walk.push_back(u);
        int v = rot_[u][i];
        int j = index_in(rot_[v], u);
        i = (j + 1) % static_cast<int>(rot_[v].size());
        u = v;
      } while (!(u == v0 && i == i0));
      faces_.push_back(std::move(face));
    }
  }
}

const std::vector<int>& PlaneGraph::rotation(int v) const {
  if (!has_vertex(v)) throw Error("no vertex " + std::to_string(v));
  return rot_[v];
}

int PlaneGraph::degree(int v) const { return static_cast<int>(rotation(v).size()); }

bool PlaneGraph::adjacent(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return index_in(rot_[u], v) != -1;
}

int PlaneGraph::face_of_arc(int u, int v) const {
  int i = index_in(rotation(u), v);
  if (i == -1) throw Error("no arc " + std::to_string(u) + "->" + std::to_string(v));
  return arc_face_[u][i];
}

int PlaneGraph::face_at_corner(int v, int i) const {
  const auto& r = rotation(v);
  if (i < 0 || i >= static_cast<int>(r.size())) throw Error("corner index out of range");
  // The face whose boundary contains the path r[i] - v - r[i+1]: it owns the
  // arc (r[i] -> v), whose successor arc is (v -> r[i+1]).
  return face_of_arc(r[i], v);
}

void PlaneGraph::set_outer_face(int face_id) {
  if (face_id < 0 || face_id >= static_cast<int>(faces_.size())) throw Error("no face " + std::to_string(face_id));
  outer_face_ = face_id;
}

std::vector<std::pair<int, int>> PlaneGraph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v <= n_; ++v)
    for (int u : rot_[v])
      if (v < u) es.emplace_back(v, u);
  std::sort(es.begin(), es.end());
  return es;
}

std::vector<int> PlaneGraph::outer_vertices() const {
  if (faces_.empty()) return {};
  std::set<int> vs(faces_[outer_face_].walk.begin(), faces_[outer_face_].walk.end());
  return {vs.begin(), vs.end()};
}

std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

std::optional<std::vector<int>> shortest_cycle_in_range(const PlaneGraph& g, int lo, int hi) {
  if (lo < 3 || lo > hi) throw Error("invalid cycle length range");
  // Shortest length first; within a length, DFS in ascending vertex order
  // from the cycle's smallest vertex yields the lexicographically least
  // sequence first.
  for (int len = lo; len <= hi && len <= g.n(); ++len) {
    for (int s = 1; s <= g.n(); ++s) {
      // BFS distances to s over vertices >= s, for pruning.
      std::vector<int> dist(g.n() + 1, -1);
      std::deque<int> q{s};
      dist[s] = 0;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : g.rotation(v))
          if (u >= s && dist[u] == -1) {
            dist[u] = dist[v] + 1;
            q.push_back(u);
          }
      }
      std::vector<int> path{s};
      std::vector<char> used(g.n() + 1, 0);
      used[s] = 1;
      std::optional<std::vector<int>> found;
      std::function<bool()> dfs = [&]() {
        int depth = static_cast<int>(path.size());
        if (depth == len) {
          if (g.adjacent(path.back(), s)) {
            found = path;
            return true;
          }
          return false;
        }
        std::vector<int> nbrs = g.rotation(path.back());
        std::sort(nbrs.begin(), nbrs.end());
        for (int u : nbrs) {
          if (u <= s || used[u]) continue;
          if (dist[u] == -1 || dist[u] > len - depth) continue;
          used[u] = 1;
          path.push_back(u);
          if (dfs()) return true;
          path.pop_back();
          used[u] = 0;
        }
        return false;
      };
      if (dfs()) return found;
    }
  }
  return std::nullopt;
}

bool has_path_at_most(const PlaneGraph& g, int u, int v, int len, const std::set<int>& excluded) {
  if (excluded.count(u) || excluded.count(v)) throw Error("path endpoints must not be excluded");
  if (u == v) return len >= 0;
  std::vector<int> dist(g.n() + 1, -1);
  std::deque<int> q{u};
  dist[u] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (dist[x] >= len) continue;
    for (int y : g.rotation(x)) {
      if (excluded.count(y) || dist[y] != -1) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return true;
      q.push_back(y);
    }
  }
  return false;
}

std::vector<std::vector<int>> simple_cycles_up_to(const PlaneGraph& g, int maxlen) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(g.n() + 1, 0);
  std::function<void(int)> dfs = [&](int s) {
    int v = path.back();
    for (int u : g.rotation(v)) {
      if (u == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (u <= s || used[u]) continue;
      if (static_cast<int>(path.size()) >= maxlen) continue;
      used[u] = 1;
      path.push_back(u);
      dfs(s);
      path.pop_back();
      used[u] = 0;
    }
  };
  for (int s = 1; s <= g.n(); ++s) {
    path = {s};
    used[s] = 1;
    dfs(s);
    used[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::array<int, 3>> triangles(const PlaneGraph& g) {
  std::vector<std::array<int, 3>> ts;
  for (auto [u, v] : g.edges())
    for (int w : g.rotation(v))
      if (w > v && g.adjacent(u, w)) ts.push_back({u, v, w});
  std::sort(ts.begin(), ts.end());
  return ts;
}

bool in_triangle(const PlaneGraph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw Error("no edge " + std::to_string(u) + "-" + std::to_string(v));
  for (int w : g.rotation(u))
    if (w != v && g.adjacent(w, v)) return true;
  return false;
}

bool vertex_in_triangle(const PlaneGraph& g, int v) {
  const auto& r = g.rotation(v);
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(r.size()); ++j)
      if (g.adjacent(r[i], r[j])) return true;
  return false;
}

namespace {

// Tarjan block decomposition of the subgraph induced by an edge list.
struct BlockFinder {
  std::map<int, std::vector<int>> adj;
  std::map<int, int> num, low;
  int counter = 0;
  std::vector<std::pair<int, int>> stack;
  std::vector<Block> found;

  void emit(const std::pair<int, int>& top_edge) {
    Block b;
    std::set<int> vs;
    std::set<std::pair<int, int>> es;
    while (true) {
      auto e = stack.back();
      stack.pop_back();
      es.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
      vs.insert(e.first);
      vs.insert(e.second);
      if (e == top_edge) break;
    }
    b.edges = {es.begin(), es.end()};
    b.verts = {vs.begin(), vs.end()};
    found.push_back(std::move(b));
  }

  void dfs(int v, int parent) {
    num[v] = low[v] = ++counter;
    for (int u : adj[v]) {
      if (!num.count(u)) {
        stack.push_back({v, u});
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= num[v]) emit({v, u});
      } else if (u != parent && num[u] < num[v]) {
        stack.push_back({v, u});
        low[v] = std::min(low[v], num[u]);
      }
    }
  }
};

}  // namespace

std::vector<Block> blocks(const PlaneGraph& g, const std::vector<std::pair<int, int>>& h) {
  for (auto [u, v] : h)
    if (!g.adjacent(u, v)) throw Error("subgraph edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
  return blocks_of_edges(h);
}

std::vector<Block> blocks_of_edges(const std::vector<std::pair<int, int>>& h) {
  BlockFinder bf;
  std::set<std::pair<int, int>> hset;
  for (auto [u, v] : h) {
    if (u == v) throw Error("loop edge " + std::to_string(u));
    auto e = std::make_pair(std::min(u, v), std::max(u, v));
    if (!hset.insert(e).second) continue;
    bf.adj[e.first].push_back(e.second);
    bf.adj[e.second].push_back(e.first);
  }
  for (auto& [v, nb] : bf.adj) std::sort(nb.begin(), nb.end());
  for (auto& [v, nb] : bf.adj)
    if (!bf.num.count(v)) bf.dfs(v, 0);

  // Order blocks so each meets the union of its predecessors in at most one
  // vertex: BFS over the block-cut forest, rooting each component at the
  // block holding its smallest vertex.
  std::vector<Block> all = std::move(bf.found);
  std::sort(all.begin(), all.end(), [](const Block& a, const Block& b) { return a.verts < b.verts; });
  std::vector<char> done(all.size(), 0);
  std::vector<Block> ordered;
  std::set<int> placed_verts;
  while (ordered.size() < all.size()) {
    // Attached blocks (sharing one cutvertex with the placed union) go first;
    // a fresh root is started only when no attached block remains.  The
    // block-cut structure is a forest, so an attached block always shares
    // exactly one vertex.
    int pick = -1, pick_shared = -1;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
      if (done[i]) continue;
      int shared = 0;
      for (int v : all[i].verts) shared += static_cast<int>(placed_verts.count(v));
      if (shared > 1) continue;
      if (shared > pick_shared || (shared == pick_shared && all[i].verts < all[pick].verts)) {
        pick = i;
        pick_shared = shared;
      }
    }
    if (pick == -1) throw Error("block ordering failed");
    done[pick] = 1;
    placed_verts.insert(all[pick].verts.begin(), all[pick].verts.end());
    ordered.push_back(all[pick]);
  }
  return ordered;
}

std::optional<int> two_connectivity_defect(const PlaneGraph& g) {
  if (g.component_count() != 1 || g.n() < 3) return 0;
  auto bs = blocks(g, g.edges());
  if (bs.size() == 1 && static_cast<int>(bs[0].verts.size()) == g.n()) return std::nullopt;
  // A cutvertex lies in more than one block; report the smallest.
  std::map<int, int> in_blocks;
  for (const auto& b : bs)
    for (int v : b.verts) ++in_blocks[v];
  for (auto [v, cnt] : in_blocks)
    if (cnt > 1) return v;
  return 0;  // unreachable for connected n >= 3
}

bool is_two_connected(const PlaneGraph& g) { return !two_connectivity_defect(g).has_value(); }

std::vector<int> face_sides(const PlaneGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw Error("cycle too short");
  std::set<std::pair<int, int>> kedges;
  std::set<int> kverts(cycle.begin(), cycle.end());
  if (kverts.size() != cycle.size()) throw Error("cycle repeats a vertex");
  for (size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (!g.adjacent(u, v)) throw Error("cycle edge " + std::to_string(u) + "-" + std::to_string(v) + " missing");
    kedges.insert({std::min(u, v), std::max(u, v)});
  }
  int kcomp = g.component_of()[cycle[0]];

  int nf = static_cast<int>(g.faces().size());
  std::vector<int> side(nf, -1);
  // Flood the dual graph from the outer face, never crossing the cycle.
  std::deque<int> q{g.outer_face()};
  side[g.outer_face()] = 0;
  // Dual adjacency via shared non-cycle edges.
  std::vector<std::vector<int>> dual(nf);
  for (auto [u, v] : g.edges()) {
    if (kedges.count({u, v})) continue;
    int f1 = g.face_of_arc(u, v), f2 = g.face_of_arc(v, u);
    dual[f1].push_back(f2);
    dual[f2].push_back(f1);
  }
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int f2 : dual[f])
      if (side[f2] == -1) {
        side[f2] = 0;
        q.push_back(f2);
      }
  }
  for (int f = 0; f < nf; ++f) {
    if (side[f] != -1) continue;
    int fc = g.component_of()[g.faces()[f].walk.front()];
    side[f] = (fc == kcomp) ? 1 : -1;
  }
  // Sanity: the two faces flanking each cycle edge must land on opposite sides.
  for (auto [u, v] : kedges)
    if (side[g.face_of_arc(u, v)] == side[g.face_of_arc(v, u)])
      throw Error("face side partition failed (outer face inside the cycle?)");
  return side;
}

std::vector<int> interior_vertices(const PlaneGraph& g, const std::vector<int>& cycle) {
  std::vector<int> side = face_sides(g, cycle);
  std::set<int> kverts(cycle.begin(), cycle.end());
  std::vector<int> inside;
  for (int v = 1; v <= g.n(); ++v) {
    if (kverts.count(v) || g.degree(v) == 0) continue;
    if (side[g.face_of_arc(v, g.rotation(v)[0])] == 1) inside.push_back(v);
  }
  return inside;
}

BoundarySet BoundarySet::of(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  BoundarySet s;
  s.verts = std::move(vs);
  return s;
}

bool BoundarySet::contains(int v) const {
  return std::binary_search(verts.begin(), verts.end(), v);
}

}  // namespace corr
