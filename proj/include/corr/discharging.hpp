#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "corr/plane_graph.hpp"

namespace corr {

// All charge bookkeeping is exact; only 1 and 1/2 ever move.
using Rational = boost::rational<long long>;

std::string format_rational(const Rational& r);  // "p/q", plain "p" for integers

struct ElementRef {
  enum Kind { Vertex, Face } kind;
  int id;

  std::string str() const;
  bool operator==(const ElementRef&) const = default;
};

struct Transfer {
  std::string rule;  // "R1".."R4"
  ElementRef from, to;
  Rational amount;
};

// Exact charge per vertex and face with the full transfer log.
struct ChargeLedger {
  enum class Stage { Initial, Final };

  Stage stage = Stage::Initial;
  std::vector<Rational> vertex_charge;  // 1-based
  std::vector<Rational> face_charge;    // by face id
  std::vector<Transfer> log;

  Rational total() const;
  Rational charge(const ElementRef& e) const;
};

// c0(v) = 2 deg(v) - 6, c0(f) = |f| - 6; the total is exactly -12 for
// connected plane graphs.  Rejects disconnected graphs.
ChargeLedger initial_charges(const PlaneGraph& g);

// Rules R1-R4.  The outer face neither sends nor receives under R1-R3; under
// R4 each degree-2 S-vertex receives 1/2 from its non-outer incident face.
// Transfers preserve the total.
//   R1: every vertex of a non-outer triangular face sends 1 to it.
//   R2: every non-outer face of length >= 9 sends 1/2 to each incident
//       degree-3 vertex outside S that lies in a triangle.
//   R3: a vertex of degree >= 4 with consecutive neighbors a,b,c,d (either
//       rotation direction) where ab is an edge and cd is not sends 1/2 to
//       the face holding the path b-v-c; at most once per receiving face.
//   R4: the non-outer face at a degree-2 S-vertex sends it 1/2.
ChargeLedger apply_rules(const PlaneGraph& g, const BoundarySet& s, const ChargeLedger& initial);

struct AuditViolation {
  ElementRef elem;
  Rational charge;
  Rational bound;
  std::string what;
};

// Final-charge audit: the three-tier vertex bound, non-negativity of
// non-outer faces, the per-vertex R1+R3 spending cap, and conservation.
struct AuditReport {
  std::vector<AuditViolation> violations;
  std::vector<std::string> notes;
  Rational total;
  bool conserved = false;
  bool ok() const { return violations.empty() && conserved; }
};

AuditReport audit(const PlaneGraph& g, const BoundarySet& s, const ChargeLedger& final_ledger);

}  // namespace corr
