#include "holozeta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "holozeta/cycles.hpp"
#include "holozeta/error.hpp"
#include "holozeta/knot.hpp"
#include "holozeta/presentation.hpp"
#include "holozeta/quandle.hpp"
#include "holozeta/series.hpp"
#include "holozeta/text.hpp"
#include "holozeta/transform.hpp"
#include "holozeta/wirtinger.hpp"

namespace holozeta::cli {

namespace {

struct Options {
  std::string graph, rep, pd, pres, script, expect, quandle, pair, weights, route = "both";
  std::size_t order = 8;
  bool no_normalize = false;
};

char const* flag(bool b) { return b ? "true" : "false"; }

void witness(std::ostream& out, nlohmann::json const& record) { out << "witness: " << record.dump() << '\n'; }

Representation load_rep(Options const& o) {
  return o.rep.empty() ? Representation::abelianization() : parse_representation(read_file(o.rep));
}

LaurentPoly shown(LaurentPoly const& p, Options const& o) {
  return o.no_normalize || p.is_zero() ? p : normalize_up_to_units(p);
}

int zeta(Options const& o, std::ostream& out) {
  auto text = read_file(o.graph);
  MatrixGraph g;
  if (is_group_graph_text(text)) {
    g = apply_representation(parse_group_graph(text), load_rep(o));
    out << "graph: group\n";
  } else {
    g = parse_matrix_graph(text);
    out << "graph: matrix\n";
  }
  out << "vertices: " << g.vertices().size() << '\n';
  out << "edges: " << g.edges().size() << '\n';
  out << "zeta-reciprocal: " << to_string(shown(zeta_reciprocal(g), o)) << '\n';
  bool agrees = euler_product(g, o.order) == series_det_inverse(adjacency_matrix(g), o.order);
  out << "euler-product-order: " << o.order << '\n';
  out << "euler-product-agrees: " << flag(agrees) << '\n';
  if (agrees) return Ok;
  witness(out, {{"check", "euler-product"}, {"order", o.order}});
  return VerificationFailed;
}

int alexander(Options const& o, std::ostream& out) {
  auto d = parse_diagram(read_file(o.pd));
  auto rep = load_rep(o);
  out << "crossings: " << d.crossing_count() << '\n';
  out << "route: " << o.route << '\n';
  auto route = o.route == "direct" ? AlexanderRoute::Direct : AlexanderRoute::Graph;
  auto result = twisted_alexander(d, rep, route);
  out << "numerator: " << to_string(o.no_normalize ? result.raw_numerator : result.numerator) << '\n';
  out << "denominator: " << to_string(result.denominator) << '\n';
  if (result.denominator_vanishes) out << "denominator-vanishes: true\n";
  out << "certified: " << flag(result.certified) << '\n';
  if (o.route != "both") return Ok;
  auto direct = twisted_alexander(d, rep, AlexanderRoute::Direct);
  bool agree = direct.numerator == result.numerator && direct.denominator == result.denominator;
  out << "routes-agree: " << flag(agree) << '\n';
  if (agree) return Ok;
  witness(out, {{"check", "routes"},
                {"graph", to_string(result.numerator)},
                {"direct", to_string(direct.numerator)}});
  return VerificationFailed;
}

int tietze_verify(Options const& o, std::ostream& out) {
  auto start = parse_presentation(read_file(o.pres));
  auto moves = parse_tietze_script(read_file(o.script), start);
  std::optional<BasedPresentation> expected;
  if (!o.expect.empty()) expected = parse_presentation(read_file(o.expect));
  auto report = verify_tietze_script(start, moves, expected ? &*expected : nullptr, load_rep(o));
  out << "steps: " << moves.size() << '\n';
  if (!report.steps.empty()) {
    out << "zeta-start: " << to_string(shown(report.steps.front().zeta, o)) << '\n';
    out << "zeta-end: " << to_string(shown(report.steps.back().zeta, o)) << '\n';
  }
  bool exact = std::all_of(report.steps.begin(), report.steps.end(), [](auto const& s) { return s.exactly_equal; });
  out << "zeta-exactly-equal: " << flag(exact) << '\n';
  if (expected) out << "matches-expected: " << flag(report.matches_expected) << '\n';
  out << "verified: " << flag(report.ok) << '\n';
  if (report.ok) return Ok;
  nlohmann::json w{{"check", "tietze"}, {"message", report.message}};
  if (report.failed_step) w["step"] = *report.failed_step + 1;
  witness(out, w);
  return VerificationFailed;
}

template <typename Report>
int graph_report(Report const& report, Options const& o, std::ostream& out) {
  out << "steps: " << report.steps_applied << '\n';
  out << "zeta-start: " << to_string(shown(report.zeta_start, o)) << '\n';
  out << "zeta-end: " << to_string(shown(report.zeta_end, o)) << '\n';
  out << "zeta-preserved: " << flag(report.zeta_preserved) << '\n';
  out << "structural-match: " << flag(report.structural_match) << '\n';
  out << "zeta-match: " << flag(report.zeta_match) << '\n';
  out << "verified: " << flag(report.ok) << '\n';
  if (report.ok) return Ok;
  nlohmann::json w{{"check", "graph-script"}, {"message", report.message}};
  if (report.failed_step) w["step"] = *report.failed_step + 1;
  witness(out, w);
  return VerificationFailed;
}

int graph_verify(Options const& o, std::ostream& out) {
  auto text = read_file(o.graph);
  auto expected = read_file(o.expect);
  auto script = read_file(o.script);
  if (is_group_graph_text(text)) {
    auto g = parse_group_graph(text);
    auto steps = parse_group_script(script, g.alphabet());
    return graph_report(verify_equivalence(g, steps, parse_group_graph(expected), load_rep(o)), o, out);
  }
  auto g = parse_matrix_graph(text);
  return graph_report(verify_equivalence(g, parse_matrix_script(script), parse_matrix_graph(expected)), o, out);
}

int violations_report(std::vector<Violation> const& found, char const* key, std::ostream& out) {
  out << key << ": " << flag(found.empty()) << '\n';
  out << "violations: " << found.size() << '\n';
  for (auto const& v : found) out << "witness: " << to_string(v) << '\n';
  return found.empty() ? Ok : VerificationFailed;
}

int quandle_check(Options const& o, std::ostream& out) {
  auto table = parse_quandle_table(read_file(o.quandle));
  out << "size: " << table.size() << '\n';
  return violations_report(quandle_violations(table), "quandle", out);
}

int pair_check(Options const& o, std::ostream& out) {
  auto q = parse_quandle(read_file(o.quandle));
  auto f = parse_alexander_pair(read_file(o.pair));
  out << "size: " << q.size() << '\n';
  return violations_report(alexander_pair_violations(q, f), "alexander-pair", out);
}

int holonomy_check(Options const& o, std::ostream& out) {
  auto q = parse_quandle(read_file(o.quandle));
  if (o.weights.empty() == o.pair.empty()) throw ParseError("give exactly one of --weights and --pair");
  std::optional<AlexanderPair> f;
  if (!o.pair.empty()) f = parse_alexander_pair(read_file(o.pair));
  auto g = f ? f_twisted_weights(q, *f) : parse_crossing_weights(read_file(o.weights));
  out << "size: " << q.size() << '\n';
  auto found = holonomy_violations(q, g);
  int code = violations_report(found, "holonomy", out);
  if (code == Ok && f) {
    bool round_trip = recover_pair(q, g) == *f;
    out << "recovered-pair-matches: " << flag(round_trip) << '\n';
    if (!round_trip) {
      witness(out, {{"check", "recover-pair"}});
      return VerificationFailed;
    }
  }
  return code;
}

int colorings(Options const& o, std::ostream& out) {
  auto q = parse_quandle(read_file(o.quandle));
  auto d = parse_diagram(read_file(o.pd));
  auto all = enumerate_colorings(q, d);
  std::optional<CrossingWeights> g;
  if (!o.pair.empty()) g = f_twisted_weights(q, parse_alexander_pair(read_file(o.pair)));
  out << "count: " << all.size() << '\n';
  for (auto const& c : all) {
    out << "coloring: " << to_string(c, d) << '\n';
    if (g) out << "zeta-reciprocal: " << to_string(shown(zeta_reciprocal(quandle_weighted_graph(q, d, c, *g)), o)) << '\n';
  }
  return Ok;
}

int export_dot(Options const& o, std::ostream& out) {
  if (o.graph.empty() == o.pd.empty()) throw ParseError("give exactly one of --graph and --pd");
  if (!o.pd.empty()) {
    out << to_dot(build_group_weighted_graph(wirtinger_presentation(parse_diagram(read_file(o.pd)))));
    return Ok;
  }
  auto text = read_file(o.graph);
  if (is_group_graph_text(text))
    out << to_dot(parse_group_graph(text));
  else
    out << to_dot(parse_matrix_graph(text));
  return Ok;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph zeta functions and twisted Alexander polynomials"};
  app.require_subcommand(1, 1);
  Options o;

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta function of a weighted graph");
  zeta_cmd->add_option("--graph", o.graph, "graph file")->required();
  zeta_cmd->add_option("--rep", o.rep, "representation for a group-weighted graph");
  zeta_cmd->add_option("--order", o.order, "truncation order of the Euler product check");
  zeta_cmd->add_flag("--no-normalize", o.no_normalize, "print the raw determinant");

  auto* alex_cmd = app.add_subcommand("alexander", "twisted Alexander polynomial of a knot diagram");
  alex_cmd->add_option("--pd", o.pd, "PD or Gauss code file")->required();
  alex_cmd->add_option("--rep", o.rep, "representation file");
  alex_cmd->add_option("--route", o.route, "graph, direct or both")
      ->check(CLI::IsMember({"graph", "direct", "both"}));
  alex_cmd->add_flag("--no-normalize", o.no_normalize, "print the raw numerator");

  auto* tietze_cmd = app.add_subcommand("tietze-verify", "replay a Tietze script");
  tietze_cmd->add_option("--pres", o.pres, "presentation file")->required();
  tietze_cmd->add_option("--script", o.script, "Tietze script")->required();
  tietze_cmd->add_option("--expect", o.expect, "expected final presentation");
  tietze_cmd->add_option("--rep", o.rep, "representation file");
  tietze_cmd->add_flag("--no-normalize", o.no_normalize, "print raw determinants");

  auto* graph_cmd = app.add_subcommand("graph-verify", "replay a graph rewrite script");
  graph_cmd->add_option("--graph", o.graph, "graph file")->required();
  graph_cmd->add_option("--script", o.script, "rewrite script")->required();
  graph_cmd->add_option("--expect", o.expect, "expected final graph")->required();
  graph_cmd->add_option("--rep", o.rep, "representation for group-weighted graphs");
  graph_cmd->add_flag("--no-normalize", o.no_normalize, "print raw determinants");

  auto* quandle_cmd = app.add_subcommand("quandle-check", "check the quandle axioms");
  quandle_cmd->add_option("--quandle", o.quandle, "quandle table file")->required();

  auto* pair_cmd = app.add_subcommand("pair-check", "check the Alexander pair conditions");
  pair_cmd->add_option("--quandle", o.quandle, "quandle table file")->required();
  pair_cmd->add_option("--pair", o.pair, "Alexander pair file")->required();

  auto* holo_cmd = app.add_subcommand("holonomy-check", "check the holonomy conditions of crossing weights");
  holo_cmd->add_option("--quandle", o.quandle, "quandle table file")->required();
  holo_cmd->add_option("--weights", o.weights, "crossing weight file");
  holo_cmd->add_option("--pair", o.pair, "Alexander pair whose twisted weights are checked");

  auto* col_cmd = app.add_subcommand("colorings", "enumerate quandle colourings of a knot diagram");
  col_cmd->add_option("--quandle", o.quandle, "quandle table file")->required();
  col_cmd->add_option("--pd", o.pd, "PD or Gauss code file")->required();
  col_cmd->add_option("--pair", o.pair, "Alexander pair; adds the zeta function of each colouring");
  col_cmd->add_flag("--no-normalize", o.no_normalize, "print raw determinants");

  auto* dot_cmd = app.add_subcommand("export-dot", "write a graph in DOT format");
  dot_cmd->add_option("--graph", o.graph, "graph file");
  dot_cmd->add_option("--pd", o.pd, "knot diagram; exports its Wirtinger graph");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return Ok;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }

  try {
    if (zeta_cmd->parsed()) return zeta(o, out);
    if (alex_cmd->parsed()) return alexander(o, out);
    if (tietze_cmd->parsed()) return tietze_verify(o, out);
    if (graph_cmd->parsed()) return graph_verify(o, out);
    if (quandle_cmd->parsed()) return quandle_check(o, out);
    if (pair_cmd->parsed()) return pair_check(o, out);
    if (holo_cmd->parsed()) return holonomy_check(o, out);
    if (col_cmd->parsed()) return colorings(o, out);
    return export_dot(o, out);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }
}

}  // namespace holozeta::cli
