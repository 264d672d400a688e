#include "corr/correspondence.hpp"

#include <algorithm>
#include <numeric>

namespace corr {

CorrespondenceAssignment::CorrespondenceAssignment(int k) : k_(k) {
  if (k < 1) throw Error("number of colors must be positive");
}

bool CorrespondenceAssignment::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return maps_.count({u, v}) != 0;
}

void CorrespondenceAssignment::set_edge(int u, int v, const PartialInjection& m) {
  if (u == v) throw Error("loop edge " + std::to_string(u));
  if (u < 1 || v < 1) throw Error("vertex ids must be positive");
  if (m.k() != k_) throw Error("edge map has k=" + std::to_string(m.k()) + ", assignment has k=" + std::to_string(k_));
  if (u < v)
    maps_[{u, v}] = m;
  else
    maps_[{v, u}] = m.inverse();
  max_vertex_ = std::max({max_vertex_, u, v});
}

PartialInjection CorrespondenceAssignment::between(int u, int v) const {
  auto key = std::make_pair(std::min(u, v), std::max(u, v));
  auto it = maps_.find(key);
  if (it == maps_.end()) throw Error("no edge " + std::to_string(u) + "-" + std::to_string(v) + " in assignment");
  return u < v ? it->second : it->second.inverse();
}

std::vector<std::pair<int, int>> CorrespondenceAssignment::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(maps_.size());
  for (const auto& [e, m] : maps_) es.push_back(e);
  return es;
}

Walk Walk::reversed() const {
  Walk w;
  w.verts.assign(verts.rbegin(), verts.rend());
  return w;
}

PartialInjection walk_map(const CorrespondenceAssignment& c, const Walk& w) {
  if (w.verts.empty()) throw Error("empty walk");
  PartialInjection acc = PartialInjection::identity(c.k());
  for (size_t i = 0; i + 1 < w.verts.size(); ++i) acc = compose(acc, c.between(w.verts[i], w.verts[i + 1]));
  return acc;
}

bool is_consistent_on(const CorrespondenceAssignment& c, const Walk& w) {
  if (!w.closed()) throw Error("consistency is defined for closed walks only");
  return walk_map(c, w).straight();
}

std::vector<std::array<int, 3>> assignment_triangles(const CorrespondenceAssignment& c) {
  std::vector<std::array<int, 3>> ts;
  for (auto [u, v] : c.edges())
    for (int w = v + 1; w <= c.max_vertex(); ++w)
      if (c.has_edge(u, w) && c.has_edge(v, w)) ts.push_back({u, v, w});
  std::sort(ts.begin(), ts.end());
  return ts;
}

bool is_consistent_all_triangles(const CorrespondenceAssignment& c) {
  for (auto [a, b, d] : assignment_triangles(c)) {
    const std::array<std::array<int, 3>, 6> rooted = {{{a, b, d}, {a, d, b}, {b, a, d}, {b, d, a}, {d, a, b}, {d, b, a}}};
    for (const auto& t : rooted) {
      Walk w{{t[0], t[1], t[2], t[0]}};
      if (!is_consistent_on(c, w)) return false;
    }
  }
  return true;
}

namespace {
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

bool is_consistent_global(const CorrespondenceAssignment& c) {
  int n = c.max_vertex(), k = c.k();
  if (n == 0) return true;
  Dsu dsu(n * k);
  auto id = [k](int v, int col) { return (v - 1) * k + (col - 1); };
  for (auto [u, v] : c.edges()) {
    PartialInjection m = c.between(u, v);
    for (int col = 1; col <= k; ++col)
      if (m.map(col) != 0) dsu.unite(id(u, col), id(v, m.map(col)));
  }
  for (int v = 1; v <= n; ++v)
    for (int c1 = 1; c1 <= k; ++c1)
      for (int c2 = c1 + 1; c2 <= k; ++c2)
        if (dsu.find(id(v, c1)) == dsu.find(id(v, c2))) return false;
  return true;
}

bool is_straight(const CorrespondenceAssignment& c, int u, int v) { return c.between(u, v).straight(); }

bool is_full(const CorrespondenceAssignment& c, int u, int v) { return c.between(u, v).full(); }

}  // namespace corr
