#include "corr/discharging.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace corr {

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string ElementRef::str() const { return (kind == Vertex ? "v" : "f") + std::to_string(id); }

Rational ChargeLedger::total() const {
  Rational t = 0;
  for (size_t v = 1; v < vertex_charge.size(); ++v) t += vertex_charge[v];
  for (const Rational& c : face_charge) t += c;
  return t;
}

Rational ChargeLedger::charge(const ElementRef& e) const {
  return e.kind == ElementRef::Vertex ? vertex_charge[e.id] : face_charge[e.id];
}

ChargeLedger initial_charges(const PlaneGraph& g) {
  if (g.component_count() != 1) throw Error("initial charges are defined for connected graphs");
  if (g.edge_count() == 0) throw Error("initial charges need at least one edge");
  ChargeLedger led;
  led.stage = ChargeLedger::Stage::Initial;
  led.vertex_charge.assign(g.n() + 1, 0);
  for (int v = 1; v <= g.n(); ++v) led.vertex_charge[v] = Rational(2 * g.degree(v) - 6);
  led.face_charge.clear();
  for (const Face& f : g.faces()) led.face_charge.push_back(Rational(f.length() - 6));
  return led;
}

namespace {

std::vector<int> distinct_walk_vertices(const Face& f) {
  std::set<int> s(f.walk.begin(), f.walk.end());
  return {s.begin(), s.end()};
}

void move_charge(ChargeLedger& led, const std::string& rule, ElementRef from, ElementRef to, Rational amount) {
  if (from.kind == ElementRef::Vertex)
    led.vertex_charge[from.id] -= amount;
  else
    led.face_charge[from.id] -= amount;
  if (to.kind == ElementRef::Vertex)
    led.vertex_charge[to.id] += amount;
  else
    led.face_charge[to.id] += amount;
  led.log.push_back({rule, from, to, amount});
}

}  // namespace

ChargeLedger apply_rules(const PlaneGraph& g, const BoundarySet& s, const ChargeLedger& initial) {
  if (initial.stage != ChargeLedger::Stage::Initial) throw Error("apply_rules expects an initial-stage ledger");
  ChargeLedger led = initial;
  const Rational half(1, 2);
  int outer = g.outer_face();

  // R1
  for (int fid = 0; fid < static_cast<int>(g.faces().size()); ++fid) {
    if (fid == outer || g.faces()[fid].length() != 3) continue;
    for (int v : distinct_walk_vertices(g.faces()[fid]))
      move_charge(led, "R1", {ElementRef::Vertex, v}, {ElementRef::Face, fid}, 1);
  }

  // R2
  for (int fid = 0; fid < static_cast<int>(g.faces().size()); ++fid) {
    if (fid == outer || g.faces()[fid].length() < 9) continue;
    for (int v : distinct_walk_vertices(g.faces()[fid]))
      if (g.degree(v) == 3 && !s.contains(v) && vertex_in_triangle(g, v))
        move_charge(led, "R2", {ElementRef::Face, fid}, {ElementRef::Vertex, v}, half);
  }

  // R3, scanning 4-windows of the rotation in both directions; each
  // qualifying window fires once, deduplicated by the receiving face.
  for (int v = 1; v <= g.n(); ++v) {
    int d = g.degree(v);
    if (d < 4) continue;
    std::set<int> paid;
    auto scan = [&](const std::vector<int>& order, bool rev) {
      for (int i = 0; i < d; ++i) {
        int a = order[i % d], b = order[(i + 1) % d], c2 = order[(i + 2) % d], e = order[(i + 3) % d];
        if (!g.adjacent(a, b) || g.adjacent(c2, e)) continue;
        // Face holding the path b-v-c2: for the original direction b,c2 are
        // rotation-consecutive at v; for the reversed direction c2,b are.
        int fid = rev ? g.face_of_arc(c2, v) : g.face_of_arc(b, v);
        if (fid == outer || paid.count(fid)) continue;
        paid.insert(fid);
        move_charge(led, "R3", {ElementRef::Vertex, v}, {ElementRef::Face, fid}, half);
      }
    };
    scan(g.rotation(v), false);
    std::vector<int> reversed(g.rotation(v).rbegin(), g.rotation(v).rend());
    scan(reversed, true);
  }

  // R4
  for (int v = 1; v <= g.n(); ++v) {
    if (g.degree(v) != 2 || !s.contains(v)) continue;
    std::set<int> fs = {g.face_at_corner(v, 0), g.face_at_corner(v, 1)};
    for (int fid : fs)
      if (fid != outer) move_charge(led, "R4", {ElementRef::Face, fid}, {ElementRef::Vertex, v}, half);
  }

  led.stage = ChargeLedger::Stage::Final;
  return led;
}

AuditReport audit(const PlaneGraph& g, const BoundarySet& s, const ChargeLedger& final_ledger) {
  if (final_ledger.stage != ChargeLedger::Stage::Final) throw Error("audit expects a final-stage ledger");
  AuditReport rep;
  rep.total = final_ledger.total();
  rep.conserved = rep.total == Rational(-12);
  if (!rep.conserved) rep.notes.push_back("total charge " + format_rational(rep.total) + " differs from -12");

  // Vertex bound (dagger): >= 0 outside S or at degree >= 4; >= -1 in S at
  // degree >= 3; >= -3/2 in S at degree <= 2.
  for (int v = 1; v <= g.n(); ++v) {
    Rational bound = !s.contains(v) || g.degree(v) >= 4 ? Rational(0)
                     : g.degree(v) >= 3                 ? Rational(-1)
                                                        : Rational(-3, 2);
    Rational c = final_ledger.vertex_charge[v];
    if (c < bound)
      rep.violations.push_back({{ElementRef::Vertex, v}, c, bound,
                                "vertex " + std::to_string(v) + " has charge " + format_rational(c) + " < " +
                                    format_rational(bound)});
  }

  for (int fid = 0; fid < static_cast<int>(g.faces().size()); ++fid) {
    if (fid == g.outer_face()) continue;
    Rational c = final_ledger.face_charge[fid];
    if (c < 0)
      rep.violations.push_back({{ElementRef::Face, fid}, c, 0,
                                "face " + std::to_string(fid) + " (length " +
                                    std::to_string(g.faces()[fid].length()) + ") has charge " + format_rational(c)});
  }
  rep.notes.push_back("outer face charge " + format_rational(final_ledger.face_charge[g.outer_face()]));

  // Spending cap: R1+R3 spend at most 3/4 deg(v) (triangles at a vertex are
  // edge-disjoint without 4-cycles).
  std::map<int, Rational> spent;
  for (const Transfer& t : final_ledger.log)
    if (t.from.kind == ElementRef::Vertex && (t.rule == "R1" || t.rule == "R3")) spent[t.from.id] += t.amount;
  for (auto [v, amt] : spent)
    if (amt > Rational(3 * g.degree(v), 4))
      rep.violations.push_back({{ElementRef::Vertex, v}, amt, Rational(3 * g.degree(v), 4),
                                "vertex " + std::to_string(v) + " sends " + format_rational(amt) +
                                    " by R1+R3, above 3/4 of its degree"});

  // The interpretive R2 exclusion of the outer face: flag instances where
  // including it would move charge.
  const Face& fo = g.faces()[g.outer_face()];
  if (fo.length() >= 9) {
    int q = 0;
    for (int v : distinct_walk_vertices(fo))
      if (g.degree(v) == 3 && !s.contains(v) && vertex_in_triangle(g, v)) ++q;
    if (q > 0)
      rep.notes.push_back("outer face has length >= 9 and " + std::to_string(q) +
                          " R2-eligible vertices; R2 excludes the outer face here");
  }
  return rep;
}

}  // namespace corr
