#include "corr/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "corr/io.hpp"

namespace corr {

namespace {

// Smallest-vertex-set face whose walk matches the predicate; -1 if none.
int find_face(const PlaneGraph& g, const std::function<bool(const Face&)>& pred) {
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
    if (pred(g.faces()[f])) return f;
  return -1;
}

}  // namespace

PlaneGraph ring_gadget(int m, const std::vector<int>& apex_edges, const std::map<int, int>& pendants) {
  if (m < 9) throw Error("ring length below 9 would create a forbidden cycle");
  std::set<int> apexset(apex_edges.begin(), apex_edges.end());
  for (int e : apexset)
    if (e < 1 || e > m) throw Error("apex edge index out of range");

  int next_id = m;
  std::map<int, int> apex_of;  // ring edge index -> apex vertex
  for (int e : apexset) apex_of[e] = ++next_id;
  std::map<int, std::vector<int>> chain_of;  // ring edge index -> pendant path
  for (auto [e, len] : pendants) {
    if (!apexset.count(e)) throw Error("pendant attached to a non-apex edge");
    for (int i = 0; i < len; ++i) chain_of[e].push_back(++next_id);
  }

  std::vector<std::vector<int>> rot(next_id);
  auto ring_next = [m](int i) { return i % m + 1; };
  auto ring_prev = [m](int i) { return (i + m - 2) % m + 1; };
  for (int i = 1; i <= m; ++i) {
    std::vector<int> r{ring_prev(i)};
    if (apex_of.count(ring_prev(i))) r.push_back(apex_of[ring_prev(i)]);  // apex of edge (i-1, i)
    if (apex_of.count(i)) r.push_back(apex_of[i]);                        // apex of edge (i, i+1)
    r.push_back(ring_next(i));
    rot[i - 1] = r;
  }
  for (auto [e, w] : apex_of) {
    rot[w - 1] = {e, ring_next(e)};
    auto it = chain_of.find(e);
    if (it != chain_of.end() && !it->second.empty()) rot[w - 1].push_back(it->second.front());
  }
  for (auto& [e, chain] : chain_of) {
    for (size_t i = 0; i < chain.size(); ++i) {
      int prev = (i == 0) ? apex_of[e] : chain[i - 1];
      rot[chain[i] - 1].push_back(prev);
      if (i + 1 < chain.size()) rot[chain[i] - 1].push_back(chain[i + 1]);
    }
  }

  PlaneGraph g = PlaneGraph::from_rotations(rot);
  int ring_face = find_face(g, [m](const Face& f) {
    if (f.length() != m) return false;
    for (int v : f.walk)
      if (v > m) return false;
    return true;
  });
  if (ring_face == -1) throw Error("internal: ring face not found");
  g.set_outer_face(ring_face);
  return g;
}

PlaneGraph triangle_chain(int t, const std::vector<int>& links) {
  if (t < 1) throw Error("need at least one triangle");
  if (static_cast<int>(links.size()) + 1 != t) throw Error("need one link length per adjacent triangle pair");

  // Build an adjacency-with-order structure directly; bridges can enter a
  // rotation anywhere without affecting planarity.
  std::vector<std::vector<int>> rot;
  auto new_vertex = [&rot]() {
    rot.push_back({});
    return static_cast<int>(rot.size());
  };
  auto add_edge = [&rot](int u, int v) {
    rot[u - 1].push_back(v);
    rot[v - 1].push_back(u);
  };

  int prev_exit = 0;
  for (int j = 0; j < t; ++j) {
    int a;
    if (j > 0 && links[j - 1] == 0) {
      a = prev_exit;  // glue at the shared vertex
    } else {
      a = new_vertex();
      if (j > 0) {
        int from = prev_exit;
        for (int i = 0; i < links[j - 1] - 1; ++i) {
          int mid = new_vertex();
          add_edge(from, mid);
          from = mid;
        }
        add_edge(from, a);
      }
    }
    int b = new_vertex(), c = new_vertex();
    add_edge(a, b);
    add_edge(b, c);
    add_edge(c, a);
    prev_exit = c;
  }
  return PlaneGraph::from_rotations(rot);
}

PlaneGraph cycle_pair(int a, int b, char mode, int plen) {
  if (a < 9 || b < 9) throw Error("cycle lengths below 9 are out of class");
  std::vector<std::vector<int>> rot;
  auto new_vertex = [&rot]() {
    rot.push_back({});
    return static_cast<int>(rot.size());
  };
  auto fresh_ring = [&](int len) {
    std::vector<int> ids;
    for (int i = 0; i < len; ++i) ids.push_back(new_vertex());
    for (int i = 0; i < len; ++i) {
      rot[ids[i] - 1].push_back(ids[(i + 1) % len]);
      rot[ids[(i + 1) % len] - 1].push_back(ids[i]);
    }
    return ids;
  };
  auto chain = [&](int len) {
    std::vector<int> ids;
    for (int i = 0; i < len; ++i) ids.push_back(new_vertex());
    for (int i = 0; i + 1 < len; ++i) {
      rot[ids[i] - 1].push_back(ids[i + 1]);
      rot[ids[i + 1] - 1].push_back(ids[i]);
    }
    return ids;
  };

  auto A = fresh_ring(a);
  if (mode == 'v') {
    // Second ring through A[0]; its two edges stay adjacent in the rotation.
    auto u = chain(b - 1);
    rot[A[0] - 1].push_back(u.front());
    rot[A[0] - 1].push_back(u.back());
    rot[u.front() - 1].push_back(A[0]);
    rot[u.back() - 1].push_back(A[0]);
  } else if (mode == 'e') {
    // Second ring through the edge A[0]-A[1]: a chain from A[1] back to
    // A[0].  At A[1] the chain enters the corner right after A[0]; at A[0]
    // it sits past the ring neighbors.  (The other insertions twist the
    // surface and fail the Euler check.)
    auto u = chain(b - 2);
    int x = A[0], y = A[1];
    auto& ry = rot[y - 1];
    ry.insert(std::find(ry.begin(), ry.end(), x) + 1, u.front());
    rot[u.front() - 1].push_back(y);
    rot[x - 1].push_back(u.back());
    rot[u.back() - 1].push_back(x);
  } else if (mode == 'p') {
    if (plen < 1) throw Error("path mode needs positive length");
    auto B = fresh_ring(b);
    int from = A[0];
    for (int i = 0; i < plen - 1; ++i) {
      int v = new_vertex();
      rot[from - 1].push_back(v);
      rot[v - 1].push_back(from);
      from = v;
    }
    rot[from - 1].push_back(B[0]);
    rot[B[0] - 1].push_back(from);
  } else {
    throw Error("unknown cycle_pair mode");
  }
  return PlaneGraph::from_rotations(rot);
}

const std::vector<PartialInjection>& all_partial_injections(int k) {
  static std::map<int, std::vector<PartialInjection>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  std::vector<PartialInjection> all;
  std::vector<std::pair<int, int>> pairs;
  std::function<void(int, unsigned)> rec = [&](int src, unsigned used_targets) {
    if (src > k) {
      all.push_back(PartialInjection::from_pairs(k, pairs));
      return;
    }
    rec(src + 1, used_targets);  // src outside the domain
    for (int tgt = 1; tgt <= k; ++tgt) {
      if (used_targets & (1u << tgt)) continue;
      pairs.emplace_back(src, tgt);
      rec(src + 1, used_targets | (1u << tgt));
      pairs.pop_back();
    }
  };
  rec(1, 0);
  return cache.emplace(k, std::move(all)).first->second;
}

PartialInjection random_partial_injection(int k, std::mt19937_64& rng) {
  const auto& all = all_partial_injections(k);
  return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

CorrespondenceAssignment random_assignment(const PlaneGraph& g, int k, std::mt19937_64& rng) {
  CorrespondenceAssignment c(k);
  for (auto [u, v] : g.edges()) c.set_edge(u, v, random_partial_injection(k, rng));
  return c;
}

namespace {

bool triangle_consistent(const CorrespondenceAssignment& c, int a, int b, int d) {
  const std::array<std::array<int, 3>, 6> rooted = {{{a, b, d}, {a, d, b}, {b, a, d}, {b, d, a}, {d, a, b}, {d, b, a}}};
  for (const auto& t : rooted)
    if (!is_consistent_on(c, Walk{{t[0], t[1], t[2], t[0]}})) return false;
  return true;
}

}  // namespace

CorrespondenceAssignment random_triangle_consistent_assignment(const PlaneGraph& g, int k, std::mt19937_64& rng,
                                                               int max_passes) {
  CorrespondenceAssignment c = random_assignment(g, k, rng);
  auto ts = triangles(g);
  for (int pass = 0; pass < max_passes; ++pass) {
    bool clean = true;
    for (auto [a, b, d] : ts) {
      if (triangle_consistent(c, a, b, d)) continue;
      clean = false;
      c.set_edge(a, b, random_partial_injection(k, rng));
      c.set_edge(b, d, random_partial_injection(k, rng));
      c.set_edge(a, d, random_partial_injection(k, rng));
    }
    if (clean) return c;
  }
  throw Error("triangle repair did not converge within the retry bound");
}

std::optional<Coloring> sample_precoloring(const PlaneGraph& g, const BoundarySet& s,
                                           const CorrespondenceAssignment& c, std::mt19937_64& rng) {
  Coloring f(g.n());
  if (s.empty()) return f;
  // Exact enumeration of the valid colorings of G[S], then a uniform pick.
  std::vector<std::pair<int, int>> s_edges;
  for (auto [u, v] : c.edges())
    if (s.contains(u) && s.contains(v)) s_edges.emplace_back(u, v);
  const auto& sv = s.verts;
  std::vector<int> odo(sv.size(), 1);
  std::vector<Coloring> valid;
  while (true) {
    for (size_t i = 0; i < sv.size(); ++i) f.set(sv[i], odo[i]);
    bool ok = true;
    for (auto [u, v] : s_edges)
      if (c.between(u, v).map(f.at(u)) == f.at(v)) {
        ok = false;
        break;
      }
    if (ok) valid.push_back(f);
    size_t i = 0;
    for (; i < odo.size(); ++i) {
      if (odo[i] < c.k()) {
        ++odo[i];
        break;
      }
      odo[i] = 1;
    }
    if (i == odo.size()) break;
  }
  if (valid.empty()) return std::nullopt;
  return valid[std::uniform_int_distribution<size_t>(0, valid.size() - 1)(rng)];
}

TargetInstance corpus_target(const CorpusSpec& spec, int index, std::string* family_out) {
  std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(index) * 0xbf58476d1ce4e5b9ull + 1);
  auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  int fam;
  switch (spec.kind) {
    case CorpusSpec::Kind::RingGadget: fam = 0; break;
    case CorpusSpec::Kind::TriangleChain: fam = 1; break;
    case CorpusSpec::Kind::LongCycles: fam = 2; break;
    case CorpusSpec::Kind::Curated: fam = 3; break;
    default: fam = index % 3;
  }
  if (fam == 3 && spec.curated_files.empty()) throw Error("curated corpus without files");

  PlaneGraph g;
  bool s_from_file = false;
  BoundarySet file_s;
  std::string family;
  if (fam == 3) {
    const std::string& path = spec.curated_files[index % spec.curated_files.size()];
    PgFile pg = parse_pg_file(path);
    g = std::move(pg.g);
    if (!pg.s.empty()) {
      file_s = pg.s;
      s_from_file = true;
    }
    family = "curated:" + path;
  } else if (fam == 0) {
    int m = pick(9, 13);
    int napex = pick(0, 3);
    std::set<int> apexset;
    while (static_cast<int>(apexset.size()) < napex) apexset.insert(pick(1, m));
    std::map<int, int> pendants;
    for (int e : apexset)
      if (pick(0, 1)) pendants[e] = pick(1, 2);
    g = ring_gadget(m, {apexset.begin(), apexset.end()}, pendants);
    family = "ring-gadget";
  } else if (fam == 1) {
    int t = pick(2, 4);
    std::vector<int> links;
    for (int j = 0; j + 1 < t; ++j) links.push_back(pick(0, 3));
    g = triangle_chain(t, links);
    family = "triangle-chain";
  } else {
    int a = pick(9, 11), b = pick(9, 11);
    char mode = "vep"[pick(0, 2)];
    g = cycle_pair(a, b, mode, pick(1, 3));
    family = "long-cycles";
  }
  if (g.n() > spec.max_n) {
    // Regenerate small deterministically: fall back to a bare ring.
    g = ring_gadget(9, {});
    family += "-fallback";
  }
  if (family_out) *family_out = family;

  // Boundary set: the curated file's own S when present, otherwise rotate
  // between the full outer face (when small enough), a single outer vertex,
  // and the empty set.
  std::vector<int> outer = g.outer_vertices();
  BoundarySet s;
  int mode = pick(0, 2);
  if (s_from_file)
    s = file_s;
  else if (mode == 0 && static_cast<int>(outer.size()) <= 12)
    s = BoundarySet::of(outer);
  else if (mode != 2)
    s = BoundarySet::of({outer[rng() % outer.size()]});

  // Generators are constructive, but every emitted instance is still checked.
  if (auto cyc = shortest_cycle_in_range(g, 4, 8))
    throw Error("generator produced a cycle of length " + std::to_string(cyc->size()));

  CorrespondenceAssignment c = spec.raw_assignments ? random_assignment(g, 3, rng)
                                                    : random_triangle_consistent_assignment(g, 3, rng);
  auto f0 = sample_precoloring(g, s, c, rng);
  if (!f0) throw Error("no valid precoloring exists on G[S] (unexpected for k=3)");
  return TargetInstance{g, s, c, *f0};
}

VerifySummary verify_theorem(const CorpusSpec& spec, int trials, int jobs) {
  VerifySummary sum;
  sum.trials.resize(trials);
  std::vector<std::optional<TargetInstance>> failures(trials);
  std::atomic<int> next{0};
  auto worker = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= trials) return;
      TrialResult tr;
      tr.index = i;
      try {
        TargetInstance inst = corpus_target(spec, i, &tr.family);
        tr.n = inst.g.n();
        tr.edges = inst.g.edge_count();
        tr.s_size = inst.s.size();
        auto bad = validate_target(inst);
        if (spec.raw_assignments)
          std::erase_if(bad, [](const std::string& b) { return b.find("length 3") != std::string::npos; });
        tr.in_class = bad.empty();
        if (!tr.in_class) {
          tr.note = "rejected: " + bad.front();
        } else {
          auto f = solve(inst);
          tr.sat = f.has_value();
          if (!tr.sat) failures[i] = inst;
        }
      } catch (const Error& e) {
        tr.note = std::string("generation failed: ") + e.what();
      }
      sum.trials[i] = tr;
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& tr : sum.trials) {
    ++sum.total;
    if (!tr.in_class)
      ++sum.rejected;
    else if (tr.sat)
      ++sum.sat;
    else
      ++sum.unsat;
  }
  for (auto& f : failures)
    if (f) sum.falsifications.push_back(std::move(*f));
  return sum;
}

}  // namespace corr
