#include "corr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace corr {

namespace {

// Splits a line into whitespace-separated tokens; ':' and ',' act as spaces,
// '#' starts a comment.
std::vector<std::string> tokenize(const std::string& line) {
  std::string clean;
  for (char ch : line) {
    if (ch == '#') break;
    clean += (ch == ':' || ch == ',') ? ' ' : ch;
  }
  std::istringstream ss(clean);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

struct LineScanner {
  std::istream& in;
  int lineno = 0;

  bool next(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      toks = tokenize(line);
      if (!toks.empty()) return true;
    }
    return false;
  }
};

int to_int(const std::string& tok, int lineno) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    throw ParseError(lineno, "expected an integer, got '" + tok + "'");
  }
}

// "n=5" style key=value.
int keyed_int(const std::string& tok, const std::string& key, int lineno) {
  if (tok.rfind(key + "=", 0) != 0) throw ParseError(lineno, "expected '" + key + "=<int>', got '" + tok + "'");
  return to_int(tok.substr(key.size() + 1), lineno);
}

}  // namespace

PgFile parse_pg(std::istream& in) {
  LineScanner sc{in};
  std::vector<std::string> toks;
  if (!sc.next(toks) || toks[0] != "planegraph" || toks.size() != 2)
    throw ParseError(sc.lineno, "expected header 'planegraph n=<N>'");
  int n = keyed_int(toks[1], "n", sc.lineno);
  if (n < 1) throw ParseError(sc.lineno, "vertex count must be positive");

  std::vector<std::vector<int>> rot(n);
  std::vector<char> have(n + 1, 0);
  std::vector<int> outer_walk, s_verts;
  bool have_outer = false;
  while (sc.next(toks)) {
    if (toks[0] == "rot") {
      if (toks.size() < 2) throw ParseError(sc.lineno, "rot line needs a vertex id");
      int v = to_int(toks[1], sc.lineno);
      if (v < 1 || v > n) throw ParseError(sc.lineno, "vertex id " + std::to_string(v) + " out of range");
      if (have[v]) throw ParseError(sc.lineno, "duplicate rotation for vertex " + std::to_string(v));
      have[v] = 1;
      for (size_t i = 2; i < toks.size(); ++i) {
        int u = to_int(toks[i], sc.lineno);
        if (u < 1 || u > n) throw ParseError(sc.lineno, "neighbor " + std::to_string(u) + " out of range");
        rot[v - 1].push_back(u);
      }
    } else if (toks[0] == "outer") {
      have_outer = true;
      for (size_t i = 1; i < toks.size(); ++i) outer_walk.push_back(to_int(toks[i], sc.lineno));
    } else if (toks[0] == "S") {
      for (size_t i = 1; i < toks.size(); ++i) s_verts.push_back(to_int(toks[i], sc.lineno));
    } else {
      throw ParseError(sc.lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!have[v]) throw ParseError(sc.lineno, "missing rotation for vertex " + std::to_string(v));

  PgFile out;
  try {
    out.g = PlaneGraph::from_rotations(rot);
  } catch (const Error& e) {
    throw ParseError(sc.lineno, e.what());
  }
  if (have_outer) {
    // Find the face whose boundary walk matches cyclically, trying the given
    // direction first, then the reverse.
    int match = -1;
    auto cyclic_match = [](const std::vector<int>& a, const std::vector<int>& b) {
      if (a.size() != b.size() || a.empty()) return false;
      for (size_t off = 0; off < a.size(); ++off) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i) ok = a[(off + i) % a.size()] == b[i];
        if (ok) return true;
      }
      return false;
    };
    std::vector<int> rev(outer_walk.rbegin(), outer_walk.rend());
    for (int pass = 0; pass < 2 && match == -1; ++pass)
      for (int f = 0; f < static_cast<int>(out.g.faces().size()); ++f)
        if (cyclic_match(out.g.faces()[f].walk, pass == 0 ? outer_walk : rev)) {
          match = f;
          break;
        }
    if (match == -1) throw ParseError(sc.lineno, "outer walk does not bound any face");
    out.g.set_outer_face(match);
  }
  for (int v : s_verts)
    if (v < 1 || v > n) throw ParseError(sc.lineno, "S vertex " + std::to_string(v) + " out of range");
  out.s = BoundarySet::of(s_verts);
  return out;
}

std::string emit_pg(const PlaneGraph& g, const BoundarySet& s) {
  std::ostringstream out;
  out << "planegraph n=" << g.n() << "\n";
  for (int v = 1; v <= g.n(); ++v) {
    out << "rot " << v << ":";
    for (int u : g.rotation(v)) out << " " << u;
    out << "\n";
  }
  // Outer walk rotated to start at its smallest vertex.
  static const std::vector<int> no_walk;
  const auto& walk = g.faces().empty() ? no_walk : g.faces()[g.outer_face()].walk;
  if (!walk.empty()) {
    size_t start = std::min_element(walk.begin(), walk.end()) - walk.begin();
    out << "outer:";
    for (size_t i = 0; i < walk.size(); ++i) out << " " << walk[(start + i) % walk.size()];
    out << "\n";
  }
  if (!s.empty()) {
    out << "S:";
    for (int v : s.verts) out << " " << v;
    out << "\n";
  }
  return out.str();
}

CorrespondenceAssignment parse_ca(std::istream& in) {
  LineScanner sc{in};
  std::vector<std::string> toks;
  if (!sc.next(toks) || toks[0] != "correspondence" || toks.size() != 2)
    throw ParseError(sc.lineno, "expected header 'correspondence k=<k>'");
  int k = keyed_int(toks[1], "k", sc.lineno);
  if (k < 1) throw ParseError(sc.lineno, "k must be positive");

  CorrespondenceAssignment c(k);
  while (sc.next(toks)) {
    if (toks[0] != "edge" || toks.size() < 4) throw ParseError(sc.lineno, "expected 'edge <u> <v>: ...'");
    int u = to_int(toks[1], sc.lineno), v = to_int(toks[2], sc.lineno);
    if (c.has_edge(u, v)) throw ParseError(sc.lineno, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    PartialInjection m(k);
    if (toks.size() == 4 && toks[3] == "-") {
      // empty map
    } else if (toks.size() == 4 && toks[3] == "id") {
      m = PartialInjection::identity(k);
    } else {
      for (size_t i = 3; i < toks.size(); ++i) {
        auto gt = toks[i].find('>');
        if (gt == std::string::npos) throw ParseError(sc.lineno, "expected 'a>b', got '" + toks[i] + "'");
        int a = to_int(toks[i].substr(0, gt), sc.lineno);
        int b = to_int(toks[i].substr(gt + 1), sc.lineno);
        try {
          m.add(a, b);
        } catch (const Error& e) {
          throw ParseError(sc.lineno, e.what());
        }
      }
    }
    try {
      c.set_edge(u, v, m);
    } catch (const Error& e) {
      throw ParseError(sc.lineno, e.what());
    }
  }
  return c;
}

std::string emit_ca(const CorrespondenceAssignment& c) {
  std::ostringstream out;
  out << "correspondence k=" << c.k() << "\n";
  for (const auto& [e, m] : c.edge_maps()) {
    out << "edge " << e.first << " " << e.second << ":";
    if (m.domain_size() == 0) {
      out << " -";
    } else if (m.full() && m.straight()) {
      out << " id";
    } else {
      bool first = true;
      for (auto [a, b] : m.pairs()) {
        out << (first ? " " : ", ") << a << ">" << b;
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

ListAssignment parse_la(std::istream& in) {
  LineScanner sc{in};
  std::vector<std::string> toks;
  if (!sc.next(toks) || toks[0] != "lists" || toks.size() != 2)
    throw ParseError(sc.lineno, "expected header 'lists k=<k>'");
  int k = keyed_int(toks[1], "k", sc.lineno);
  if (k < 1) throw ParseError(sc.lineno, "k must be positive");

  std::map<int, std::vector<int>> lists;
  int maxv = 0;
  while (sc.next(toks)) {
    if (toks[0] != "v" || toks.size() < 2) throw ParseError(sc.lineno, "expected 'v <id>: <c1> ... <ck>'");
    int v = to_int(toks[1], sc.lineno);
    if (v < 1) throw ParseError(sc.lineno, "vertex id must be positive");
    if (lists.count(v)) throw ParseError(sc.lineno, "duplicate list for vertex " + std::to_string(v));
    std::vector<int> ls;
    for (size_t i = 2; i < toks.size(); ++i) ls.push_back(to_int(toks[i], sc.lineno));
    if (static_cast<int>(ls.size()) != k)
      throw ParseError(sc.lineno, "list of vertex " + std::to_string(v) + " has " + std::to_string(ls.size()) +
                                      " labels, expected " + std::to_string(k));
    lists[v] = std::move(ls);
    maxv = std::max(maxv, v);
  }
  ListAssignment la;
  la.k = k;
  la.lists.assign(maxv + 1, {});
  for (int v = 1; v <= maxv; ++v) {
    auto it = lists.find(v);
    if (it == lists.end()) throw ParseError(sc.lineno, "missing list for vertex " + std::to_string(v));
    la.lists[v] = it->second;
  }
  return la;
}

std::string emit_la(const ListAssignment& la) {
  std::ostringstream out;
  out << "lists k=" << la.k << "\n";
  for (int v = 1; v <= la.n(); ++v) {
    out << "v " << v << ":";
    for (int c : la.lists[v]) out << " " << c;
    out << "\n";
  }
  return out.str();
}

Coloring parse_col(std::istream& in, int n) {
  LineScanner sc{in};
  std::vector<std::string> toks;
  Coloring f(n);
  while (sc.next(toks)) {
    if (toks[0] != "color" || toks.size() != 3) throw ParseError(sc.lineno, "expected 'color <v>: <c>'");
    int v = to_int(toks[1], sc.lineno), c = to_int(toks[2], sc.lineno);
    if (v < 1 || v > n) throw ParseError(sc.lineno, "vertex id " + std::to_string(v) + " out of range");
    if (f.colored(v)) throw ParseError(sc.lineno, "vertex " + std::to_string(v) + " colored twice");
    if (c < 1) throw ParseError(sc.lineno, "colors are positive");
    f.set(v, c);
  }
  return f;
}

std::string emit_col(const Coloring& f) {
  std::ostringstream out;
  for (int v = 1; v <= f.n(); ++v)
    if (f.colored(v)) out << "color " << v << ": " << f.at(v) << "\n";
  return out.str();
}

std::string emit_qmap(const std::vector<std::vector<int>>& q, int k) {
  std::ostringstream out;
  out << "qmap k=" << k << "\n";
  for (size_t v = 1; v < q.size(); ++v) {
    out << "q " << v << ":";
    for (int label : q[v]) out << " " << label;
    out << "\n";
  }
  return out.str();
}

std::string emit_lmap(const std::vector<std::vector<int>>& ell, int k) {
  std::ostringstream out;
  out << "lmap k=" << k << "\n";
  for (size_t v = 1; v < ell.size(); ++v) {
    out << "l " << v << ":";
    for (int c = 1; c <= k; ++c) out << " " << ell[v][c];
    out << "\n";
  }
  return out.str();
}

std::string emit_relabeling(const Relabeling& r) {
  std::ostringstream out;
  out << "relabeling n=" << r.n() << " k=" << r.k << "\n";
  for (int v = 1; v <= r.n(); ++v) {
    out << "pi " << v << ":";
    for (int c = 1; c <= r.k; ++c) out << " " << r.pi[v][c];
    out << "\n";
  }
  return out.str();
}

Relabeling parse_relabeling(std::istream& in) {
  LineScanner sc{in};
  std::vector<std::string> toks;
  if (!sc.next(toks) || toks[0] != "relabeling" || toks.size() != 3)
    throw ParseError(sc.lineno, "expected header 'relabeling n=<n> k=<k>'");
  int n = keyed_int(toks[1], "n", sc.lineno);
  int k = keyed_int(toks[2], "k", sc.lineno);
  Relabeling r = Relabeling::identity(n, k);
  while (sc.next(toks)) {
    if (toks[0] != "pi" || toks.size() != static_cast<size_t>(k) + 2)
      throw ParseError(sc.lineno, "expected 'pi <v>: p1 ... pk'");
    int v = to_int(toks[1], sc.lineno);
    if (v < 1 || v > n) throw ParseError(sc.lineno, "pi vertex out of range");
    for (int c = 1; c <= k; ++c) r.pi[v][c] = to_int(toks[c + 1], sc.lineno);
  }
  return r;
}

std::string emit_ext(const ReductionPlan& plan, int n, int k) {
  std::ostringstream out;
  out << "extension n=" << n << " k=" << k << "\n";
  out << "tetrad:";
  for (int v : plan.oriented.path) out << " " << v;
  out << "\n";
  out << "apexes: " << plan.oriented.x1 << " " << plan.oriented.x4 << "\n";
  out << "outers: " << plan.oriented.y1 << " " << plan.oriented.y4 << "\n";
  out << "merge: " << plan.keep << " " << plan.gone << "\n";
  for (int v = 1; v <= n; ++v) {
    out << "pi " << v << ":";
    for (int c = 1; c <= k; ++c) out << " " << plan.relabeling.pi[v][c];
    out << "\n";
  }
  for (int v = 1; v <= n; ++v)
    if (plan.old_to_new[v] != 0) out << "map " << v << ": " << plan.old_to_new[v] << "\n";
  return out.str();
}

ExtFile parse_ext(std::istream& in) {
  LineScanner sc{in};
  std::vector<std::string> toks;
  if (!sc.next(toks) || toks[0] != "extension" || toks.size() != 3)
    throw ParseError(sc.lineno, "expected header 'extension n=<N> k=<k>'");
  ExtFile ext;
  ext.n = keyed_int(toks[1], "n", sc.lineno);
  ext.k = keyed_int(toks[2], "k", sc.lineno);
  ext.plan.relabeling = Relabeling::identity(ext.n, ext.k);
  ext.plan.old_to_new.assign(ext.n + 1, 0);

  while (sc.next(toks)) {
    if (toks[0] == "tetrad" && toks.size() == 5) {
      for (int i = 0; i < 4; ++i) ext.plan.oriented.path[i] = to_int(toks[i + 1], sc.lineno);
    } else if (toks[0] == "apexes" && toks.size() == 3) {
      ext.plan.oriented.x1 = to_int(toks[1], sc.lineno);
      ext.plan.oriented.x4 = to_int(toks[2], sc.lineno);
    } else if (toks[0] == "outers" && toks.size() == 3) {
      ext.plan.oriented.y1 = to_int(toks[1], sc.lineno);
      ext.plan.oriented.y4 = to_int(toks[2], sc.lineno);
    } else if (toks[0] == "merge" && toks.size() == 3) {
      ext.plan.keep = to_int(toks[1], sc.lineno);
      ext.plan.gone = to_int(toks[2], sc.lineno);
    } else if (toks[0] == "pi" && toks.size() == static_cast<size_t>(ext.k) + 2) {
      int v = to_int(toks[1], sc.lineno);
      if (v < 1 || v > ext.n) throw ParseError(sc.lineno, "pi vertex out of range");
      for (int c = 1; c <= ext.k; ++c) ext.plan.relabeling.pi[v][c] = to_int(toks[c + 1], sc.lineno);
    } else if (toks[0] == "map" && toks.size() == 3) {
      int v = to_int(toks[1], sc.lineno);
      if (v < 1 || v > ext.n) throw ParseError(sc.lineno, "map vertex out of range");
      ext.plan.old_to_new[v] = to_int(toks[2], sc.lineno);
    } else {
      throw ParseError(sc.lineno, "unrecognized line in extension file");
    }
  }
  int maxnew = *std::max_element(ext.plan.old_to_new.begin(), ext.plan.old_to_new.end());
  ext.plan.new_to_old.assign(maxnew + 1, 0);
  for (int v = 1; v <= ext.n; ++v)
    if (ext.plan.old_to_new[v] != 0 && v != ext.plan.gone) ext.plan.new_to_old[ext.plan.old_to_new[v]] = v;
  return ext;
}

namespace {
template <typename T>
T parse_path(const std::string& path, T (*parser)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parser(in);
}
}  // namespace

PgFile parse_pg_file(const std::string& path) { return parse_path(path, parse_pg); }
CorrespondenceAssignment parse_ca_file(const std::string& path) { return parse_path(path, parse_ca); }
ListAssignment parse_la_file(const std::string& path) { return parse_path(path, parse_la); }
ExtFile parse_ext_file(const std::string& path) { return parse_path(path, parse_ext); }

Coloring parse_col_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_col(in, n);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace corr
