#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "klein/algebra.hpp"
#include "klein/complex.hpp"
#include "klein/enumerate.hpp"
#include "klein/graph_io.hpp"
#include "klein/operad.hpp"
#include "klein/verify.hpp"

using namespace klein;
using nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 1, check_failed = 2, internal = 3 };

struct Output {
  bool json_mode = false;
  json doc = json::object();
  void line(const std::string& s) const {
    if (!json_mode) std::cout << s << "\n";
  }
  void finish() const {
    if (json_mode && !doc.is_null()) std::cout << doc.dump(2) << "\n";
  }
};

std::optional<TopologicalFilter> parse_type(const std::string& s) {
  if (s.empty()) return std::nullopt;
  TopologicalFilter f;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> f.handles >> c1 >> f.crosscaps >> c2 >> f.boundaries) || c1 != ',' || c2 != ',') {
    throw std::invalid_argument("--type expects m,u,h");
  }
  return f;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string pass_word(bool b) { return b ? "PASS" : "FAIL"; }

struct GraphArgs {
  int genus = 0;
  int legs = 0;
  std::string variant = "ribbon";
  std::string type;
  std::size_t max_graphs = 0;
  EnumerationQuery query() const {
    EnumerationQuery q{genus, legs, parse_variant(variant), parse_type(type)};
    q.max_graphs = max_graphs;
    return q;
  }
};

void add_graph_args(CLI::App* sub, GraphArgs& a, bool with_type) {
  sub->add_option("--genus", a.genus, "operadic genus")->required()->check(CLI::NonNegativeNumber);
  sub->add_option("--legs", a.legs, "number of legs")->required()->check(CLI::NonNegativeNumber);
  sub->add_option("--variant", a.variant, "ribbon | moebius | dianalytic | moebius_leg_unoriented");
  if (with_type) sub->add_option("--type", a.type, "surface type m,u,h (handles, crosscaps, boundaries)");
  sub->add_option("--max-graphs", a.max_graphs, "give up (exit 2) beyond this many graphs; 0 means no limit");
}

// With `list`, one JSON line per graph and the census as a last JSON line.
int cmd_enumerate(const GraphArgs& a, bool list, Output& out) {
  const GraphFamily f = enumerate_graphs(a.query());
  const auto sizes = level_sizes(f);
  if (list) {
    for (std::size_t i = 0; i < f.levels.size(); ++i)
      for (const auto& c : f.levels[i])
        std::cout << json{{"edges", f.min_edges + static_cast<int>(i)}, {"code", c.hex()},
                          {"graph", graph_to_json(decode(c))}}.dump()
                  << "\n";
    out.json_mode = true;
  }
  out.line(std::string(to_string(f.query.variant)) + " genus " + std::to_string(a.genus) + " legs " +
           std::to_string(a.legs) + (a.type.empty() ? "" : " type (" + a.type + ")"));
  out.line("  edges  classes");
  json levels = json::array();
  for (std::size_t e = 0; e < sizes.size(); ++e) {
    if (!sizes[e]) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %5zu  %zu", e, sizes[e]);
    out.line(buf);
    levels.push_back({{"edges", e}, {"classes", sizes[e]}});
  }
  out.line("  total  " + std::to_string(f.total()));
  out.doc = {{"variant", to_string(f.query.variant)}, {"genus", a.genus}, {"legs", a.legs}, {"levels", levels}, {"total", f.total()}};
  if (!a.type.empty()) out.doc["type"] = a.type;
  if (list) {
    std::cout << out.doc.dump() << "\n";
    out.doc = json();
  }
  return ok;
}

// Cohomological degree s counts internal edges; the cell of a graph with s
// edges has dimension d - s with d = 6m + 3u + 3h + n - 6 = 3 genus - 3 + n.
int print_homology(const GradedComplex& cx, int d, Output& out) {
  GradedComplex c = cx;
  if (!verify_d_squared(c)) {
    out.line("d^2 != 0");
    out.doc = {{"label", c.label}, {"d_squared", false}};
    return internal;
  }
  const auto betti = betti_numbers(c);
  out.line(c.label);
  out.line("  edges s  moduli d-s      dim    betti");
  json rows = json::array();
  for (int s = c.min_degree; s <= c.max_degree(); ++s) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %7d  %10d  %7zu  %7zu", s, d - s, c.dim(s), betti.at(s));
    out.line(buf);
    rows.push_back({{"edges", s}, {"moduli_degree", d - s}, {"dim", c.dim(s)}, {"betti", betti.at(s)}});
  }
  out.line("  euler characteristic " + std::to_string(euler_characteristic(c)));
  out.doc = {{"label", c.label}, {"d_squared", true}, {"d", d}, {"degrees", rows}, {"euler", euler_characteristic(c)}};
  return ok;
}

int cmd_homology(const GraphArgs& a, Output& out) {
  const EnumerationQuery q = a.query();
  return print_homology(build_graph_complex(q), q.max_edges(), out);
}

int cmd_cobar(int n, const std::string& operad, Output& out) {
  if (operad != "ass" && operad != "mass") throw std::invalid_argument("--operad is ass or mass");
  const GradedComplex c = build_cobar_complex(n, operad == "ass" ? CobarOperad::Ass : CobarOperad::MAss);
  return print_homology(c, n - 2, out);
}

struct VerifyArgs {
  std::string suite = "all";
  int max_genus = 3;
  int max_legs = 4;
  int max_cobar = 6;
  int koszul_max = 5;
  std::size_t max_graphs = 300000;
};

int cmd_verify(const VerifyArgs& v, Output& out) {
  const std::set<std::string> known{"all", "dsq", "koszul", "duality", "closure", "figure-t", "surface", "top-degree", "algebra"};
  if (!known.count(v.suite)) throw std::invalid_argument("unknown suite " + v.suite);
  auto want = [&](const char* s) { return v.suite == "all" || v.suite == s; };
  bool all_ok = true;
  json results = json::array();
  auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    all_ok = all_ok && pass;
    out.line("[" + pass_word(pass) + "] " + name + (detail.empty() ? "" : ": " + detail));
    results.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
  };

  if (want("dsq") || want("surface") || want("top-degree")) {
    CaseOptions o;
    o.max_graphs = v.max_graphs;
    o.surface = want("surface");
    o.top_degree = want("top-degree");
    for (const auto& c : standard_cases(v.max_genus, v.max_legs, want("dsq") ? v.max_cobar : 0)) {
      const CaseResult r = run_case(c, o);
      if (!r.verified) {
        report(c.label(), false, "not verified, " + r.note);
        continue;
      }
      std::string detail = std::to_string(r.graphs) + " graphs, dims " + join(r.dims);
      if (want("dsq")) report("d^2 = 0 " + c.label(), r.d_squared, detail);
      if (r.surface_checked) report("surface invariance " + c.label(), r.surface.ok(), std::to_string(r.surface.contractions) + " contractions");
      if (r.top_checked) report("top degree " + c.label(), r.top.ok(), std::to_string(r.top.types.size()) + " types");
    }
    if (want("surface")) {
      const auto b = basic_surfaces();
      report("basic surfaces", b.ok(), b.handle.to_string() + " " + b.crosscap.to_string() + " " + b.annulus.to_string());
    }
  }
  if (want("koszul")) {
    for (int n = 2; n <= v.koszul_max; ++n) {
      const KoszulReport k = koszul_check(n);
      report("koszul n=" + std::to_string(n), k.pass(),
             "Ass dims " + join(k.dims_ass) + " betti " + join(k.betti_ass) + "; MAss dims " + join(k.dims_mass) +
                 " betti " + join(k.betti_mass));
    }
  }
  if (want("duality")) {
    const DualityReport d = quadratic_duality_check();
    report("quadratic self-duality", d.pass(),
           "dim F = " + std::to_string(d.dim_free) + ", dim R = " + std::to_string(d.dim_relations) +
               ", dim Psi(R) = " + std::to_string(d.dim_image) + ", dim R^perp = " + std::to_string(d.dim_annihilator));
  }
  if (want("closure")) {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {1, 1}, {1, 2}, {2, 1}}) {
      const ClosureReport c = closure_classes(g, n);
      report("closure (" + std::to_string(g) + "," + std::to_string(n) + ")", c.exact && !c.invariant_violation,
             std::to_string(c.graphs) + " graphs, " + std::to_string(c.classes.size()) + " classes, " +
                 std::to_string(c.distinct_invariants) + " surface invariants");
    }
    for (const auto& w : closure_witnesses()) report("witness " + w.name, w.merged, "");
  }
  if (want("figure-t")) {
    const FigureTReport f = figure_t_check();
    report("tree chain T: distinct terms", f.terms_distinct, "");
    report("tree chain T: closed", f.closed, "");
    std::string chain;
    for (const auto& s : f.bounding_text) chain += " " + s;
    report("tree chain T: not a boundary", f.non_bounding, chain.empty() ? "" : "d of" + chain + " equals +-T");
    report("dianalytic (0,5) b1 >= 1", f.b1 >= 1, "b1 = " + std::to_string(f.b1));
    report("moebius (0,5) homology in top degree only", f.mobius_top_only, "");
  }
  if (want("algebra")) {
    report("matrix algebra with transpose", check_frobenius_involution(matrix_algebra_transpose()).pass(), "");
    report("group algebra Z3", check_frobenius_involution(cyclic_group_algebra(3)).pass(), "");
    const auto bad = check_frobenius_involution(matrix_algebra_identity_involution());
    const auto& anti = bad.get("anti_automorphism");
    report("identity involution rejected", !bad.pass() && !anti.ok && !anti.witnesses.empty(), "");
    report("involutive A-infinity signs", check_involutive_ainfty_signs(square_zero_m3(-1)).pass() &&
                                               check_involutive_ainfty_signs(exterior_algebra_two_odd()).pass(), "");
  }
  out.doc = {{"suite", v.suite}, {"pass", all_ok}, {"results", results}};
  return all_ok ? ok : check_failed;
}

int cmd_closure(int genus, int legs, int edge_bound, Output& out) {
  const ClosureReport c = closure_classes(genus, legs, GraphVariant::moebius, edge_bound);
  out.line("moebius genus " + std::to_string(genus) + " legs " + std::to_string(legs) + ", edges <= " +
           std::to_string(c.edge_bound) + ": " + std::to_string(c.graphs) + " graphs, " + std::to_string(c.merges) +
           " merges, " + std::to_string(c.classes.size()) + " classes, " + std::to_string(c.distinct_invariants) +
           " surface invariants");
  json classes = json::array();
  for (const auto& k : c.classes) {
    out.line("  " + k.surface.to_string() + "  " + std::to_string(k.members) + " graphs");
    classes.push_back({{"surface", k.surface.to_string()}, {"members", k.members}, {"representative", graph_to_json(decode(k.representative))}});
  }
  out.doc = {{"genus", genus}, {"legs", legs}, {"graphs", c.graphs}, {"merges", c.merges}, {"classes", classes},
             {"distinct_invariants", c.distinct_invariants}, {"exact", c.exact}};
  if (c.invariant_violation) return internal;
  return c.exact ? ok : check_failed;
}

int cmd_check_algebra(const std::string& path, bool ainfty, Output& out) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedTable(e.what());
  }
  const AlgebraTable t = table_from_json(j);
  const AlgebraReport r = ainfty ? check_involutive_ainfty_signs(t) : check_frobenius_involution(t);
  for (const auto& c : r.checks) {
    std::string w;
    for (std::size_t i = 0; i < c.witnesses.size() && i < 3; ++i) {
      w += " (";
      for (std::size_t k = 0; k < c.witnesses[i].size(); ++k) w += (k ? "," : "") + t.label(c.witnesses[i][k]);
      w += ")";
    }
    out.line("[" + pass_word(c.ok) + "] " + c.name + (w.empty() ? "" : "  witnesses" + w));
  }
  out.doc = r.to_json(t);
  return r.pass() ? ok : check_failed;
}

int cmd_export(const GraphArgs& a, bool dot, bool complex, Output& out) {
  const EnumerationQuery q = a.query();
  if (complex) {
    GradedComplex c = build_graph_complex(q);
    std::cout << complex_to_json(c).dump(2) << "\n";
    return ok;
  }
  const GraphFamily f = enumerate_graphs(q);
  json graphs = json::array();
  int k = 0;
  for (std::size_t i = 0; i < f.levels.size(); ++i) {
    for (const auto& code : f.levels[i]) {
      const HalfEdgeGraph g = decode(code);
      if (dot) {
        std::cout << graph_to_dot(g, "G" + std::to_string(k++));
      } else {
        graphs.push_back({{"code", code.hex()}, {"graph", graph_to_json(g)}});
      }
    }
  }
  if (!dot) std::cout << graphs.dump(2) << "\n";
  out.json_mode = false;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph complexes for moduli spaces of Klein surfaces"};
  Output out;
  int threads = 0;
  app.add_flag("--json", out.json_mode, "machine-readable output");
  app.add_option("--threads", threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.require_subcommand(1, 1);

  GraphArgs en_args, ho_args, ex_args;
  auto* en = app.add_subcommand("enumerate", "count reduced graphs by edge number");
  add_graph_args(en, en_args, true);
  bool list = false;
  en->add_flag("--list", list, "print every graph as a JSON line before the census");
  auto* ho = app.add_subcommand("homology", "Betti numbers of a graph complex");
  add_graph_args(ho, ho_args, true);

  int cobar_n = 3;
  std::string operad = "ass";
  auto* co = app.add_subcommand("cobar", "cobar complex of Ass or MAss");
  co->add_option("--n", cobar_n, "arity")->required()->check(CLI::Range(2, 8));
  co->add_option("--operad", operad, "ass | mass");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "run verification suites");
  ve->add_option("--suite", va.suite, "all | dsq | koszul | duality | closure | figure-t | surface | top-degree | algebra");
  ve->add_option("--max-genus", va.max_genus);
  ve->add_option("--max-legs", va.max_legs);
  ve->add_option("--max-cobar", va.max_cobar);
  ve->add_option("--koszul-max", va.koszul_max);
  ve->add_option("--max-graphs", va.max_graphs, "skip complexes with more graphs (0: no limit)");

  int cl_genus = 0, cl_legs = 0, cl_bound = 0;
  auto* cl = app.add_subcommand("closure", "classes of one-vertex moebius graphs under edge contraction");
  cl->add_option("--genus", cl_genus)->required();
  cl->add_option("--legs", cl_legs)->required();
  cl->add_option("--edge-bound", cl_bound, "0: 3 genus - 3 + legs");

  std::string table;
  bool ainfty = false;
  auto* ca = app.add_subcommand("check-algebra", "check an algebra table against the open KTFT axioms");
  ca->add_option("table", table, "JSON table")->required();
  ca->add_flag("--ainfty", ainfty, "check the involutive A-infinity relations instead");

  bool dot = false, as_json = false, complex = false;
  auto* ex = app.add_subcommand("export", "write graphs as DOT or JSON");
  add_graph_args(ex, ex_args, true);
  auto* fmt = ex->add_option_group("format");
  fmt->add_flag("--dot", dot);
  fmt->add_flag("--json", as_json);
  fmt->require_option(1);
  ex->add_flag("--complex", complex, "the whole complex with its differentials (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    int rc = ok;
    if (*en) rc = cmd_enumerate(en_args, list, out);
    if (*ho) rc = cmd_homology(ho_args, out);
    if (*co) rc = cmd_cobar(cobar_n, operad, out);
    if (*ve) rc = cmd_verify(va, out);
    if (*cl) rc = cmd_closure(cl_genus, cl_legs, cl_bound, out);
    if (*ca) rc = cmd_check_algebra(table, ainfty, out);
    if (*ex) {
      if (complex && dot) throw std::invalid_argument("--complex is JSON only");
      return cmd_export(ex_args, dot, complex, out);
    }
    out.finish();
    return rc;
  } catch (const MalformedTable& e) {
    std::cerr << "malformed table: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const EnumerationBudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return check_failed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
}
