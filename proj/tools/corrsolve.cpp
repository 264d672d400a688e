// corrsolve: correspondence-coloring toolkit frontend.
//
// Exit codes: 0 = success / positive verdict, 1 = negative verdict
// (UNSAT, inconsistent, audit violations, failed preconditions),
// 2 = invalid input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "corr/configurations.hpp"
#include "corr/corpus.hpp"
#include "corr/discharging.hpp"
#include "corr/io.hpp"
#include "corr/solver.hpp"
#include "corr/transforms.hpp"

using namespace corr;

namespace {

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw Error("expected edges like 1-2,2-3; got '" + item + "'");
    out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return out;
}

void emit_to(const std::string& path, const std::string& content) {
  if (path == "-" || path.empty())
    std::cout << content;
  else
    write_file(path, content);
}

TargetInstance load_instance(const std::string& gpath, const std::string& cpath, const std::string& colpath,
                             const std::string& s_override) {
  TargetInstance inst;
  PgFile pg = parse_pg_file(gpath);
  inst.g = std::move(pg.g);
  inst.s = pg.s;
  if (!s_override.empty()) inst.s = BoundarySet::of(parse_id_list(s_override));
  inst.c = parse_ca_file(cpath);
  inst.f0 = colpath.empty() ? Coloring(inst.g.n()) : parse_col_file(colpath, inst.g.n());
  return inst;
}

std::string configs_report(const TargetInstance& inst) {
  std::ostringstream out;
  for (const auto& item : check_basic(inst)) {
    out << "basic " << item.id << " " << (item.pass ? "pass" : "FAIL");
    if (!item.witness.empty()) out << " " << item.witness;
    out << "\n";
  }
  auto tetrads = find_tetrads(inst);
  out << "tetrads " << tetrads.size() << "\n";
  for (const auto& t : tetrads) {
    out << "tetrad " << t.path[0] << " " << t.path[1] << " " << t.path[2] << " " << t.path[3] << " x1=" << t.x1
        << " x4=" << t.x4 << " y1=" << t.y1 << " y4=" << t.y4 << " face=" << t.face
        << (t.disjoint_from_s ? " S-disjoint" : " meets-S") << "\n";
  }
  auto issues = check_edge_fullness(inst);
  out << "fullness-issues " << issues.size() << "\n";
  for (const auto& is : issues)
    out << "fullness " << is.edge.first << "-" << is.edge.second << " " << is.kind << "\n";
  return out.str();
}

std::string audit_report_text(const PlaneGraph& g, const BoundarySet& s, const ChargeLedger& fin,
                              const AuditReport& rep) {
  std::ostringstream out;
  out << "total " << format_rational(rep.total) << (rep.conserved ? " conserved" : " NOT-CONSERVED") << "\n";
  for (int v = 1; v <= g.n(); ++v)
    out << "vertex " << v << " deg=" << g.degree(v) << (s.contains(v) ? " in-S" : "") << " charge "
        << format_rational(fin.vertex_charge[v]) << "\n";
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
    out << "face " << f << " len=" << g.faces()[f].length() << (f == g.outer_face() ? " outer" : "") << " charge "
        << format_rational(fin.face_charge[f]) << "\n";
  out << "violations " << rep.violations.size() << "\n";
  for (const auto& v : rep.violations) out << "violation " << v.what << "\n";
  for (const auto& n : rep.notes) out << "note " << n << "\n";

  // Cross-link to the structural predicates: a violation on a would-be
  // minimal counterexample must co-occur with one of these findings.
  for (const auto& item : check_basic(g, s))
    if (!item.pass) out << "cooccurs basic-" << item.id << " " << item.witness << "\n";
  for (const auto& t : find_tetrads(g, s))
    if (t.disjoint_from_s)
      out << "cooccurs tetrad " << t.path[0] << " " << t.path[1] << " " << t.path[2] << " " << t.path[3] << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"correspondence (DP) coloring toolkit"};
  app.require_subcommand(1);

  // ---- check ----
  std::string g_path, c_path, col_path;
  auto* check = app.add_subcommand("check", "validate files and check assignment consistency");
  check->add_option("--graph", g_path)->required();
  check->add_option("--assignment", c_path);
  check->add_option("--precolor", col_path);
  bool as_target = false;
  check->add_flag("--as-target", as_target, "enforce all target invariants");

  // ---- solve ----
  auto* solve_cmd = app.add_subcommand("solve", "find a C-coloring extending the precoloring");
  std::string sg, sc, scol, sout;
  bool s_as_target = false;
  solve_cmd->add_option("--graph", sg)->required();
  solve_cmd->add_option("--assignment", sc)->required();
  solve_cmd->add_option("--precolor", scol);
  solve_cmd->add_option("--out", sout);
  solve_cmd->add_flag("--as-target", s_as_target);
  bool s_shrink = false;
  solve_cmd->add_flag("--shrink", s_shrink, "on UNSAT, report a greedily minimized failed subinstance");

  // ---- check-coloring ----
  auto* ckc = app.add_subcommand("check-coloring", "verify a coloring definitionally");
  std::string kg, kc, kcol;
  bool total_required = false;
  ckc->add_option("--graph", kg)->required();
  ckc->add_option("--assignment", kc)->required();
  ckc->add_option("--coloring", kcol)->required();
  ckc->add_flag("--total", total_required, "require every vertex colored");

  // ---- straighten ----
  auto* str = app.add_subcommand("straighten", "make the given edges straight via color renaming");
  std::string tc, tedges, tout, trelab;
  str->add_option("--assignment", tc)->required();
  str->add_option("--edges", tedges, "comma list like 1-2,2-3")->required();
  str->add_option("--out", tout)->required();
  str->add_option("--relabeling", trelab, "sidecar file for the permutations");

  // ---- convert ----
  auto* conv = app.add_subcommand("convert", "list-coloring bridge in both directions");
  std::string vg, v_from_lists, v_to_lists_ca, v_out, v_map;
  conv->add_option("--graph", vg)->required();
  conv->add_option("--from-lists", v_from_lists, "input .la; emits .ca");
  conv->add_option("--to-lists", v_to_lists_ca, "input .ca; emits .la");
  conv->add_option("--out", v_out)->required();
  conv->add_option("--map", v_map, "sidecar mapping file (q_v or ell)");

  // ---- configs ----
  auto* cfg = app.add_subcommand("configs", "structural configuration report");
  std::string fg, fc, fcol, frep;
  cfg->add_option("--graph", fg)->required();
  cfg->add_option("--assignment", fc)->required();
  cfg->add_option("--precolor", fcol);
  cfg->add_option("--report", frep)->required();

  // ---- reduce ----
  auto* red = app.add_subcommand("reduce", "apply the tetrad reduction");
  std::string rg, rc, rcol, rtetrad, rprefix;
  red->add_option("--graph", rg)->required();
  red->add_option("--assignment", rc)->required();
  red->add_option("--precolor", rcol);
  red->add_option("--tetrad", rtetrad, "v1,v2,v3,v4")->required();
  red->add_option("--out-prefix", rprefix)->required();

  // ---- extend ----
  auto* ext = app.add_subcommand("extend", "lift a reduced coloring back to the original");
  std::string eg, ec, eext, ecol, eout;
  ext->add_option("--orig-graph", eg)->required();
  ext->add_option("--orig-assignment", ec)->required();
  ext->add_option("--ext", eext)->required();
  ext->add_option("--coloring", ecol)->required();
  ext->add_option("--out", eout)->required();

  // ---- audit ----
  auto* aud = app.add_subcommand("audit", "exact discharging audit");
  std::string ag, aS, aout, alog;
  aud->add_option("--graph", ag)->required();
  aud->add_option("--S", aS, "override the boundary set, comma list");
  aud->add_option("--out", aout);
  aud->add_option("--log", alog, "TSV transfer log");

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "theorem harness over a generated corpus");
  std::uint64_t vseed = 1;
  int vtrials = 100, vmaxn = 40, vjobs = 1;
  std::string vtsv, vdump, vfamily = "mixed";
  ver->add_option("--seed", vseed);
  ver->add_option("--trials", vtrials);
  ver->add_option("--max-n", vmaxn);
  ver->add_option("--jobs", vjobs);
  ver->add_option("--tsv", vtsv, "machine-readable per-trial results");
  ver->add_option("--dump-dir", vdump, "directory for falsification candidates");
  ver->add_option("--family", vfamily, "ring | chain | cycles | mixed | curated");
  std::string vcurated;
  ver->add_option("--curated", vcurated, "comma list of .pg files for the curated family");
  bool vraw = false;
  ver->add_flag("--raw-assignments", vraw,
                "sample assignments without the 3-walk consistency repair (probes the stronger, open variant)");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "emit one corpus instance");
  std::uint64_t gseed = 1;
  int gindex = 0;
  std::string gprefix, gfamily = "mixed";
  gen->add_option("--seed", gseed);
  gen->add_option("--index", gindex);
  gen->add_option("--family", gfamily);
  gen->add_option("--out-prefix", gprefix)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*check) {
      PgFile pg = parse_pg_file(g_path);
      std::cout << "graph ok: n=" << pg.g.n() << " m=" << pg.g.edge_count() << " faces=" << pg.g.faces().size()
                << "\n";
      int rc = 0;
      if (!c_path.empty()) {
        CorrespondenceAssignment c = parse_ca_file(c_path);
        bool tri = is_consistent_all_triangles(c);
        bool glob = is_consistent_global(c);
        std::cout << "consistent-on-triangles: " << (tri ? "yes" : "no") << "\n";
        std::cout << "globally-consistent: " << (glob ? "yes" : "no") << "\n";
        if (as_target) {
          TargetInstance inst{pg.g, pg.s, c,
                              col_path.empty() ? Coloring(pg.g.n()) : parse_col_file(col_path, pg.g.n())};
          auto bad = validate_target(inst);
          for (const auto& b : bad) std::cout << "target-violation: " << b << "\n";
          std::cout << "target: " << (bad.empty() ? "valid" : "invalid") << "\n";
          if (!bad.empty()) rc = 1;
        }
        if (!tri) rc = 1;
      }
      return rc;
    }

    if (*solve_cmd) {
      TargetInstance inst = load_instance(sg, sc, scol, "");
      if (s_as_target) {
        if (inst.s.empty() && !inst.f0.domain().empty()) inst.s = BoundarySet::of(inst.f0.domain());
        auto bad = validate_target(inst);
        if (!bad.empty()) {
          for (const auto& b : bad) std::cerr << "invalid target: " << b << "\n";
          return 2;
        }
      }
      auto f = solve_core(inst.g.n(), inst.c, inst.f0);
      if (!f) {
        std::cout << "UNSAT\n";
        if (s_shrink) {
          std::cout << "unsat-core:";
          for (int v : shrink_unsat(inst.g.n(), inst.c, inst.f0)) std::cout << " " << v;
          std::cout << "\n";
        }
        return 1;
      }
      std::cout << "SAT\n";
      if (!sout.empty())
        write_file(sout, emit_col(*f));
      else
        std::cout << emit_col(*f);
      return 0;
    }

    if (*ckc) {
      PgFile pg = parse_pg_file(kg);
      CorrespondenceAssignment c = parse_ca_file(kc);
      Coloring f = parse_col_file(kcol, pg.g.n());
      bool ok = coloring_valid(c, f) && (!total_required || f.total());
      std::cout << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    }

    if (*str) {
      CorrespondenceAssignment c = parse_ca_file(tc);
      try {
        auto res = straighten(c, parse_edge_list(tedges));
        emit_to(tout, emit_ca(res.assignment));
        if (!trelab.empty()) write_file(trelab, emit_relabeling(res.relabeling));
        return 0;
      } catch (const StraightenError& e) {
        std::cerr << "straighten precondition failed: " << e.reason << "\n";
        return 1;
      }
    }

    if (*conv) {
      PgFile pg = parse_pg_file(vg);
      if (!v_from_lists.empty()) {
        ListAssignment la = parse_la_file(v_from_lists);
        auto res = from_lists(pg.g, la);
        emit_to(v_out, emit_ca(res.assignment));
        if (!v_map.empty()) write_file(v_map, emit_qmap(res.q, la.k));
        return 0;
      }
      if (!v_to_lists_ca.empty()) {
        CorrespondenceAssignment c = parse_ca_file(v_to_lists_ca);
        auto res = to_lists(pg.g, c);
        emit_to(v_out, emit_la(res.lists));
        if (!v_map.empty()) write_file(v_map, emit_lmap(res.ell, c.k()));
        return 0;
      }
      std::cerr << "convert needs --from-lists or --to-lists\n";
      return 2;
    }

    if (*cfg) {
      TargetInstance inst = load_instance(fg, fc, fcol, "");
      emit_to(frep, configs_report(inst));
      return 0;
    }

    if (*red) {
      TargetInstance inst = load_instance(rg, rc, rcol, "");
      auto ids = parse_id_list(rtetrad);
      if (ids.size() != 4) throw Error("--tetrad needs four vertex ids");
      Tetrad picked;
      bool found = false;
      for (const auto& t : find_tetrads(inst)) {
        std::array<int, 4> want = {ids[0], ids[1], ids[2], ids[3]};
        std::array<int, 4> rev = {ids[3], ids[2], ids[1], ids[0]};
        if (t.path == want || t.path == rev) {
          picked = t;
          found = true;
        }
      }
      if (!found) throw Error("no tetrad on path " + rtetrad);
      try {
        auto res = reduce_tetrad(inst, picked);
        write_file(rprefix + ".pg", emit_pg(res.reduced.g, res.reduced.s));
        write_file(rprefix + ".ca", emit_ca(res.reduced.c));
        if (!res.reduced.f0.domain().empty()) write_file(rprefix + ".col", emit_col(res.reduced.f0));
        write_file(rprefix + ".ext", emit_ext(res.plan, inst.g.n(), inst.c.k()));
        std::cout << "reduced: n=" << res.reduced.g.n() << " (was " << inst.g.n() << "), merged " << res.plan.gone
                  << " into " << res.plan.keep << "\n";
        return 0;
      } catch (const ReduceError& e) {
        std::cerr << "reduction precondition failed: " << e.what() << "\n";
        return 1;
      }
    }

    if (*ext) {
      PgFile pg = parse_pg_file(eg);
      CorrespondenceAssignment c = parse_ca_file(ec);
      ExtFile exf = parse_ext_file(eext);
      if (exf.n != pg.g.n()) throw Error("extension file was made for a different graph");
      int reduced_n = static_cast<int>(exf.plan.new_to_old.size()) - 1;
      Coloring reduced = parse_col_file(ecol, reduced_n);
      TargetInstance orig{pg.g, pg.s, c, Coloring(pg.g.n())};
      Coloring full = extend_coloring(orig, exf.plan, reduced);
      emit_to(eout, emit_col(full));
      return 0;
    }

    if (*aud) {
      PgFile pg = parse_pg_file(ag);
      BoundarySet s = aS.empty() ? pg.s : BoundarySet::of(parse_id_list(aS));
      auto initial = initial_charges(pg.g);
      auto fin = apply_rules(pg.g, s, initial);
      auto rep = audit(pg.g, s, fin);
      emit_to(aout, audit_report_text(pg.g, s, fin, rep));
      if (!alog.empty()) {
        std::ostringstream tsv;
        tsv << "rule\tsource\tsink\tamount\n";
        for (const auto& t : fin.log)
          tsv << t.rule << "\t" << t.from.str() << "\t" << t.to.str() << "\t" << format_rational(t.amount) << "\n";
        write_file(alog, tsv.str());
      }
      return rep.violations.empty() && rep.conserved ? 0 : 1;
    }

    if (*ver) {
      CorpusSpec spec;
      spec.seed = vseed;
      spec.max_n = vmaxn;
      if (vfamily == "ring")
        spec.kind = CorpusSpec::Kind::RingGadget;
      else if (vfamily == "chain")
        spec.kind = CorpusSpec::Kind::TriangleChain;
      else if (vfamily == "cycles")
        spec.kind = CorpusSpec::Kind::LongCycles;
      else if (vfamily == "mixed")
        spec.kind = CorpusSpec::Kind::Mixed;
      else if (vfamily == "curated")
        spec.kind = CorpusSpec::Kind::Curated;
      else
        throw Error("unknown family " + vfamily);
      if (!vcurated.empty()) {
        std::istringstream ss(vcurated);
        std::string item;
        while (std::getline(ss, item, ',')) spec.curated_files.push_back(item);
        if (vfamily == "mixed") spec.kind = CorpusSpec::Kind::Curated;
      }
      spec.raw_assignments = vraw;

      VerifySummary sum = verify_theorem(spec, vtrials, vjobs);
      for (const auto& tr : sum.trials)
        if (!tr.note.empty()) std::cout << "trial " << tr.index << ": " << tr.note << "\n";
      std::cout << "verified " << sum.total << " targets: " << sum.sat << " SAT, " << sum.unsat << " UNSAT, "
                << sum.rejected << " rejected\n";
      if (vraw && sum.unsat > 0)
        std::cout << "note: raw-assignment UNSAT hits are counterexample candidates for the stronger claim,"
                     " not falsifications\n";
      if (!vtsv.empty()) {
        std::ostringstream tsv;
        tsv << "trial\tfamily\tn\tedges\ts\tverdict\n";
        for (const auto& tr : sum.trials)
          tsv << tr.index << "\t" << tr.family << "\t" << tr.n << "\t" << tr.edges << "\t" << tr.s_size << "\t"
              << (!tr.in_class ? "rejected" : tr.sat ? "SAT" : "UNSAT") << "\n";
        write_file(vtsv, tsv.str());
      }
      if (!vdump.empty())
        for (size_t i = 0; i < sum.falsifications.size(); ++i) {
          const auto& inst = sum.falsifications[i];
          std::string base = vdump + "/falsification" + std::to_string(i);
          write_file(base + ".pg", emit_pg(inst.g, inst.s));
          write_file(base + ".ca", emit_ca(inst.c));
          write_file(base + ".col", emit_col(inst.f0));
        }
      if (sum.unsat > 0) return 1;
      if (sum.rejected > 0) return 2;
      return 0;
    }

    if (*gen) {
      CorpusSpec spec;
      spec.seed = gseed;
      if (gfamily == "ring")
        spec.kind = CorpusSpec::Kind::RingGadget;
      else if (gfamily == "chain")
        spec.kind = CorpusSpec::Kind::TriangleChain;
      else if (gfamily == "cycles")
        spec.kind = CorpusSpec::Kind::LongCycles;
      else
        spec.kind = CorpusSpec::Kind::Mixed;
      TargetInstance inst = corpus_target(spec, gindex);
      write_file(gprefix + ".pg", emit_pg(inst.g, inst.s));
      write_file(gprefix + ".ca", emit_ca(inst.c));
      if (!inst.f0.domain().empty()) write_file(gprefix + ".col", emit_col(inst.f0));
      std::cout << "generated n=" << inst.g.n() << " m=" << inst.g.edge_count() << " |S|=" << inst.s.size() << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
