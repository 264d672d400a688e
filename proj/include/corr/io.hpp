#pragma once

#include <iosfwd>
#include <string>

#include "corr/configurations.hpp"
#include "corr/solver.hpp"
#include "corr/transforms.hpp"

namespace corr {

// .pg: `planegraph n=<N>`, one `rot <v>: <u1> <u2> ...` per vertex
// (clockwise), optional `outer: <v1> <v2> ...` boundary walk, optional
// `S: <v1> ...`.  Comments start with '#'.  Ids are 1-based.
struct PgFile {
  PlaneGraph g;
  BoundarySet s;
};

PgFile parse_pg(std::istream& in);
PgFile parse_pg_file(const std::string& path);
std::string emit_pg(const PlaneGraph& g, const BoundarySet& s);

// .ca: `correspondence k=<k>`, then `edge <u> <v>: a>b, c>d, ...`;
// `-` is the empty map, `id` the full straight map.
CorrespondenceAssignment parse_ca(std::istream& in);
CorrespondenceAssignment parse_ca_file(const std::string& path);
std::string emit_ca(const CorrespondenceAssignment& c);

// .la: `lists k=<k>`, then `v <id>: <c1> ... <ck>`.
ListAssignment parse_la(std::istream& in);
ListAssignment parse_la_file(const std::string& path);
std::string emit_la(const ListAssignment& la);

// .col: `color <v>: <c>` lines.
Coloring parse_col(std::istream& in, int n);
Coloring parse_col_file(const std::string& path, int n);
std::string emit_col(const Coloring& f);

// Sidecar mappings for the list bridge.
std::string emit_qmap(const std::vector<std::vector<int>>& q, int k);
std::string emit_lmap(const std::vector<std::vector<int>>& ell, int k);

// Relabeling sidecar: `relabeling n=<n> k=<k>`, then `pi <v>: p1 ... pk`.
std::string emit_relabeling(const Relabeling& r);
Relabeling parse_relabeling(std::istream& in);

// .ext: reduction transcript consumed by `corrsolve extend`.
struct ExtFile {
  ReductionPlan plan;
  int n = 0;  // vertex count of the original graph
  int k = 0;
};

std::string emit_ext(const ReductionPlan& plan, int n, int k);
ExtFile parse_ext(std::istream& in);
ExtFile parse_ext_file(const std::string& path);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace corr
