#include "corr/transforms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace corr {

Relabeling Relabeling::identity(int n, int k) {
  Relabeling r;
  r.k = k;
  r.pi.assign(n + 1, {});
  for (int v = 1; v <= n; ++v) {
    r.pi[v].resize(k + 1);
    std::iota(r.pi[v].begin(), r.pi[v].end(), 0);
  }
  return r;
}

bool Relabeling::is_identity_at(int v) const {
  for (int c = 1; c <= k; ++c)
    if (pi[v][c] != c) return false;
  return true;
}

std::vector<int> Relabeling::fixed_vertices() const {
  std::vector<int> fixed;
  for (int v = 1; v <= n(); ++v)
    if (is_identity_at(v)) fixed.push_back(v);
  return fixed;
}

Relabeling Relabeling::inverse() const {
  Relabeling r = *this;
  for (int v = 1; v <= n(); ++v)
    for (int c = 1; c <= k; ++c) r.pi[v][pi[v][c]] = c;
  return r;
}

CorrespondenceAssignment apply_relabeling(const CorrespondenceAssignment& c, const Relabeling& r) {
  if (r.n() < c.max_vertex()) throw Error("relabeling does not cover all vertices");
  if (r.k != c.k()) throw Error("relabeling arity mismatch");
  CorrespondenceAssignment out(c.k());
  for (const auto& [e, m] : c.edge_maps()) {
    auto [u, v] = e;
    PartialInjection mm(c.k());
    for (auto [a, b] : m.pairs()) mm.add(r.pi[u][a], r.pi[v][b]);
    out.set_edge(u, v, mm);
  }
  return out;
}

Coloring transport_coloring(const Coloring& f, const Relabeling& r) {
  Coloring out = f;
  for (int v = 1; v <= f.n() && v <= r.n(); ++v)
    if (f.colored(v)) out.set(v, r.pi[v][f.at(v)]);
  return out;
}

StraightenError::StraightenError(std::vector<int> cycle_, const std::string& reason_)
    : Error(reason_), cycle(std::move(cycle_)), reason(reason_) {}

namespace {

std::string walk_to_string(const std::vector<int>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "-" : "") + std::to_string(w[i]);
  return s;
}

// Shortest cycle through edge (u,v) within the block: u-v path avoiding the
// edge itself.
std::vector<int> cycle_through(const Block& b, int u, int v) {
  std::map<int, std::vector<int>> adj;
  for (auto [x, y] : b.edges) {
    if ((x == u && y == v) || (x == v && y == u)) continue;
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::map<int, int> prev;
  std::deque<int> q{u};
  prev[u] = u;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == v) break;
    for (int y : adj[x])
      if (!prev.count(y)) {
        prev[y] = x;
        q.push_back(y);
      }
  }
  if (!prev.count(v)) throw Error("internal: block edge not on a cycle");
  std::vector<int> path;
  for (int x = v; x != u; x = prev[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());  // u ... v
  path.push_back(u);                       // closed
  return path;
}

// Checks the straightening hypothesis on one 2-connected block: all edges
// full and the assignment consistent within the block.  With full edges,
// consistency on every cycle equals consistency on every closed walk,
// decided on the block's cover structure.
void check_block_hypothesis(const CorrespondenceAssignment& c, const Block& b) {
  for (auto [u, v] : b.edges)
    if (!c.between(u, v).full())
      throw StraightenError(cycle_through(b, u, v), "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                                        " lies on a cycle of H but is not full");
  int k = c.k();
  // BFS over states (vertex, map composed from the root vertex).  One root
  // suffices: with full edges, cycle consistency is root-independent.
  {
    int root = b.verts.front();
    std::map<std::pair<int, std::vector<int>>, std::pair<int, std::vector<int>>> prev;  // state -> predecessor state
    auto encode = [&](const PartialInjection& m) {
      std::vector<int> v;
      for (int col = 1; col <= k; ++col) v.push_back(m.map(col));
      return v;
    };
    PartialInjection ident = PartialInjection::identity(k);
    std::deque<std::pair<int, PartialInjection>> q{{root, ident}};
    std::pair<int, std::vector<int>> start{root, encode(ident)};
    prev[start] = start;
    while (!q.empty()) {
      auto [v, m] = q.front();
      q.pop_front();
      std::pair<int, std::vector<int>> cur{v, encode(m)};
      if (v == root && !m.straight()) {
        // Reconstruct the closed walk witnessing the inconsistency.
        std::vector<int> walk;
        auto s = cur;
        while (prev[s] != s) {
          walk.push_back(s.first);
          s = prev[s];
        }
        walk.push_back(root);
        std::reverse(walk.begin(), walk.end());
        throw StraightenError(walk, "assignment inconsistent on cycle " + walk_to_string(walk) + " of H");
      }
      for (auto [x, y] : b.edges) {
        int w = (x == v) ? y : (y == v ? x : 0);
        if (w == 0) continue;
        PartialInjection m2 = compose(m, c.between(v, w));
        std::pair<int, std::vector<int>> nxt{w, encode(m2)};
        if (prev.count(nxt)) continue;
        prev[nxt] = cur;
        q.push_back({w, m2});
      }
    }
  }
}

// Permutation renaming colors at the far endpoint so the map becomes
// straight: pi(b) = a for every pair (a,b), spare colors matched ascending.
std::vector<int> straightening_perm(const PartialInjection& m) {
  int k = m.k();
  std::vector<int> pi(k + 1, 0);
  std::vector<char> target_used(k + 1, 0);
  for (auto [a, b] : m.pairs()) {
    pi[b] = a;
    target_used[a] = 1;
  }
  std::vector<int> spare_targets;
  for (int ccol = 1; ccol <= k; ++ccol)
    if (!target_used[ccol]) spare_targets.push_back(ccol);
  size_t next = 0;
  for (int b = 1; b <= k; ++b)
    if (pi[b] == 0) pi[b] = spare_targets[next++];
  return pi;
}

void apply_vertex_perm(CorrespondenceAssignment& c, int v, const std::vector<int>& pi) {
  for (auto [x, y] : c.edges()) {
    if (x != v && y != v) continue;
    int w = (x == v) ? y : x;
    PartialInjection m = c.between(v, w);
    PartialInjection mm(c.k());
    for (auto [a, b] : m.pairs()) mm.add(pi[a], b);
    c.set_edge(v, w, mm);
  }
}

}  // namespace

StraightenResult straighten(const CorrespondenceAssignment& c, const std::vector<std::pair<int, int>>& h) {
  for (auto [u, v] : h)
    if (!c.has_edge(u, v)) throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " not in assignment");

  std::vector<Block> bs = blocks_of_edges(h);
  for (const auto& b : bs)
    if (b.verts.size() >= 3) check_block_hypothesis(c, b);

  int n = c.max_vertex();
  Relabeling total = Relabeling::identity(n, c.k());
  CorrespondenceAssignment cur = c;
  std::set<int> processed;
  for (const auto& b : bs) {
    int root = 0;
    for (int v : b.verts)
      if (processed.count(v)) root = v;
    if (root == 0) root = b.verts.front();

    // BFS spanning tree order from the root, neighbors ascending.
    std::map<int, std::vector<int>> adj;
    for (auto [x, y] : b.edges) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    std::deque<int> q{root};
    std::set<int> seen{root};
    while (!q.empty()) {
      int p = q.front();
      q.pop_front();
      for (int v : adj[p]) {
        if (!seen.insert(v).second) continue;
        // Rename colors at v so the tree edge p-v becomes straight.
        std::vector<int> pi = straightening_perm(cur.between(p, v));
        apply_vertex_perm(cur, v, pi);
        for (int col = 1; col <= c.k(); ++col) total.pi[v][col] = pi[total.pi[v][col]];
        q.push_back(v);
      }
    }
    processed.insert(b.verts.begin(), b.verts.end());
  }

  for (auto [u, v] : h)
    if (!cur.between(u, v).straight()) throw Error("internal: straightening left edge " + std::to_string(u) + "-" +
                                                   std::to_string(v) + " bent despite valid hypothesis");
  return {cur, total};
}

CorrespondenceAssignment saturate(const CorrespondenceAssignment& c, const PlaneGraph& g, const BoundarySet& s) {
  CorrespondenceAssignment out = c;
  for (auto [u, v] : c.edges()) {
    if (s.contains(u) && s.contains(v)) continue;
    if (in_triangle(g, u, v)) continue;
    PartialInjection m = out.between(u, v);
    while (!m.full()) {
      int c1 = 0, c2 = 0;
      for (int col = 1; col <= c.k() && c1 == 0; ++col)
        if (!m.defined(col)) c1 = col;
      for (int col = 1; col <= c.k() && c2 == 0; ++col)
        if (m.preimage(col) == 0) c2 = col;
      m.add(c1, c2);
    }
    out.set_edge(u, v, m);
  }
  return out;
}

FromListsResult from_lists(const PlaneGraph& g, const ListAssignment& la) {
  if (la.n() != g.n()) throw Error("list assignment covers " + std::to_string(la.n()) + " vertices, graph has " +
                                   std::to_string(g.n()));
  std::vector<std::vector<int>> q(g.n() + 1);
  for (int v = 1; v <= g.n(); ++v) {
    q[v] = la.lists[v];
    std::sort(q[v].begin(), q[v].end());
    if (static_cast<int>(q[v].size()) != la.k) throw Error("list of vertex " + std::to_string(v) + " has size " +
                                                           std::to_string(q[v].size()) + ", expected " + std::to_string(la.k));
    if (std::adjacent_find(q[v].begin(), q[v].end()) != q[v].end())
      throw Error("list of vertex " + std::to_string(v) + " repeats a label");
  }
  auto q_of = [&](int v, int label) {
    auto it = std::lower_bound(q[v].begin(), q[v].end(), label);
    return static_cast<int>(it - q[v].begin()) + 1;
  };
  CorrespondenceAssignment c(la.k);
  for (auto [u, v] : g.edges()) {
    PartialInjection m(la.k);
    for (int label : q[u])
      if (std::binary_search(q[v].begin(), q[v].end(), label)) m.add(q_of(u, label), q_of(v, label));
    c.set_edge(u, v, m);
  }
  return {c, q};
}

ToListsResult to_lists(const PlaneGraph& g, const CorrespondenceAssignment& c) {
  if (!is_consistent_global(c)) throw Error("to_lists requires a globally consistent assignment");
  int n = g.n(), k = c.k();
  // Union-find over (v, color).
  std::vector<int> parent(n * k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto id = [k](int v, int col) { return (v - 1) * k + (col - 1); };
  for (const auto& [e, m] : c.edge_maps()) {
    auto [u, v] = e;
    for (auto [a, b] : m.pairs()) parent[find(id(u, a))] = find(id(v, b));
  }
  // Number classes by first appearance in (vertex, color) order.
  std::map<int, int> label_of;
  std::vector<std::vector<int>> ell(n + 1, std::vector<int>(k + 1, 0));
  ListAssignment lists;
  lists.k = k;
  lists.lists.assign(n + 1, {});
  int next = 1;
  for (int v = 1; v <= n; ++v)
    for (int col = 1; col <= k; ++col) {
      int rep = find(id(v, col));
      auto it = label_of.find(rep);
      if (it == label_of.end()) it = label_of.emplace(rep, next++).first;
      ell[v][col] = it->second;
      lists.lists[v].push_back(it->second);
    }
  return {lists, ell};
}

}  // namespace corr
