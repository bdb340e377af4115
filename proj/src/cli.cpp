#include "wcl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "wcl/checks/acceptance.hpp"
#include "wcl/errors.hpp"
#include "wcl/focl.hpp"
#include "wcl/normal_form.hpp"
#include "wcl/parser.hpp"
#include "wcl/pcl.hpp"
#include "wcl/styles.hpp"

namespace wcl {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// ---------------------------------------------------------------------------
// Port collection, so --ports can usually be left out.
// ---------------------------------------------------------------------------

void collect(const Pil& phi, std::set<Port>& out) {
  switch (phi.kind()) {
    case Pil::Kind::True: return;
    case Pil::Kind::Atom: out.insert(phi.port()); return;
    case Pil::Kind::Not: collect(phi.lhs(), out); return;
    case Pil::Kind::Or:
      collect(phi.lhs(), out);
      collect(phi.rhs(), out);
      return;
  }
}

void collect(const Formula& f, std::set<Port>& out) {
  switch (f.kind()) {
    case Formula::Kind::Interaction: collect(f.pil(), out); return;
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Sum: collect(f.lhs(), out); return;
    case Formula::Kind::Union:
    case Formula::Kind::Coalesce:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      return;
    default: return;
  }
}

void collect(const WFormula& z, std::set<Port>& out) {
  switch (z.kind()) {
    case WFormula::Kind::Const: return;
    case WFormula::Kind::Bool: collect(z.boolean(), out); return;
    case WFormula::Kind::Plus:
    case WFormula::Kind::Times:
    case WFormula::Kind::Coalesce:
      collect(z.lhs(), out);
      collect(z.rhs(), out);
      return;
    default: collect(z.lhs(), out); return;
  }
}

// Port names appearing in a configuration or interaction literal.
void collect_literal(std::string_view text, std::set<Port>& out) {
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.insert(parse_port(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '{' || ch == '}' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
}

// ---------------------------------------------------------------------------
// Shared options
// ---------------------------------------------------------------------------

struct FormulaInput {
  std::string file;
  std::string expr;
  std::string dialect;
  std::string semiring = "nat";
  std::vector<std::string> binds;
  std::string ports;
  std::string strategy = "auto";

  // single: one formula, from a file or -e; otherwise the caller reads them.
  void add(CLI::App* app, bool single = true) {
    if (single) {
      app->add_option("formula", file, "Formula file (.pil .pcl .wpcl .focl .wfocl)");
      app->add_option("-e,--expr", expr, "Formula text instead of a file");
    }
    app->add_option("--dialect", dialect, "pil, pcl, wpcl, focl or wfocl");
    app->add_option("-k,--semiring", semiring,
                    "nat, bool, minplus, maxplus, viterbi or fuzzy")
        ->capture_default_str();
    app->add_option("--bind", binds, "Named weight, e.g. --bind k11=0.5")->take_all();
    app->add_option("--ports", ports, "Port universe, comma-separated");
    app->add_option("--strategy", strategy, "auto, direct or sparse")->capture_default_str();
  }

  SemiringId semiring_id() const { return parse_semiring_id(semiring); }

  EvalOptions eval_options() const {
    EvalOptions o;
    if (strategy == "auto") o.strategy = Strategy::Auto;
    else if (strategy == "direct") o.strategy = Strategy::Direct;
    else if (strategy == "sparse") o.strategy = Strategy::Sparse;
    else throw UsageError("unknown strategy '" + strategy + "'");
    return o;
  }

  std::string text() const {
    if (!file.empty() && !expr.empty()) throw UsageError("give either a formula file or -e, not both");
    if (!expr.empty()) return expr;
    if (file.empty()) throw UsageError("no formula: give a file or -e TEXT");
    return read_file(file);
  }

  Dialect dialect_or(Dialect fallback) const {
    if (!dialect.empty()) return parse_dialect(dialect);
    if (!file.empty()) return dialect_of_path(file);
    return fallback;
  }

  ParseOptions parse_options() const {
    ParseOptions o;
    o.semiring = semiring_id();
    for (const auto& b : binds) {
      auto eq = b.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects name=value, got '" + b + "'");
      o.weights[b.substr(0, eq)] = parse_value(o.semiring, b.substr(eq + 1));
    }
    return o;
  }
};

// A literal, or a .cfg file holding one ('#' starts a comment).
std::string configuration_text(const std::string& arg) {
  if (!ends_with(arg, ".cfg")) return arg;
  std::string body;
  std::istringstream in(read_file(arg));
  for (std::string line; std::getline(in, line);) {
    body += line.substr(0, line.find('#'));
    body += '\n';
  }
  return body;
}

PortUniverse universe_for(const FormulaInput& in, const std::set<Port>& mentioned) {
  if (!in.ports.empty()) return PortUniverse::parse(in.ports);
  if (mentioned.empty()) throw UsageError("no ports mentioned; give --ports");
  return PortUniverse(std::vector<Port>(mentioned.begin(), mentioned.end()));
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct Ctx {
  std::ostream& out;
  std::ostream& err;
};

int cmd_eval(const Ctx& c, const FormulaInput& in, const std::string& config,
             const std::string& interaction) {
  const Dialect d = in.dialect_or(Dialect::wpcl);
  if (d == Dialect::focl || d == Dialect::wfocl) {
    throw UsageError("first-order formulas need a model; use focl-eval");
  }
  const SemiringId k = in.semiring_id();
  const WFormula z = d == Dialect::pil ? w_bool(pcl_interaction(parse_pil(in.text())))
                                       : parse_weighted(in.text(), Dialect::wpcl, in.parse_options());
  std::set<Port> ports;
  collect(z, ports);
  if (!interaction.empty()) {
    if (!config.empty()) throw UsageError("give either --config or --interaction");
    collect_literal(interaction, ports);
    const PortUniverse u = universe_for(in, ports);
    c.out << to_string(wpil_eval(z, parse_interaction(interaction, u), u, k)) << "\n";
    return kExitOk;
  }
  if (config.empty()) throw UsageError("eval needs --config (or --interaction)");
  const std::string cfg = configuration_text(config);
  collect_literal(cfg, ports);
  const PortUniverse u = universe_for(in, ports);
  c.out << to_string(wpcl_evaluate(z, parse_configuration(cfg, u), u, k, in.eval_options()))
        << "\n";
  return kExitOk;
}

int cmd_satisfies(const Ctx& c, const FormulaInput& in, const std::string& config,
                  const std::string& interaction) {
  const Dialect d = in.dialect_or(interaction.empty() ? Dialect::pcl : Dialect::pil);
  bool holds = false;
  if (d == Dialect::pil) {
    if (interaction.empty()) throw UsageError("an interaction formula needs --interaction");
    const Pil phi = parse_pil(in.text());
    std::set<Port> ports;
    collect(phi, ports);
    collect_literal(interaction, ports);
    const PortUniverse u = universe_for(in, ports);
    holds = pil_satisfies(parse_interaction(interaction, u), phi, u);
  } else if (d == Dialect::pcl) {
    if (config.empty()) throw UsageError("satisfies needs --config");
    const Formula f = parse_boolean(in.text(), Dialect::pcl);
    const std::string cfg = configuration_text(config);
    std::set<Port> ports;
    collect(f, ports);
    collect_literal(cfg, ports);
    const PortUniverse u = universe_for(in, ports);
    holds = pcl_satisfies(parse_configuration(cfg, u), f, u, in.eval_options());
  } else {
    throw UsageError("satisfies takes pil or pcl formulas (use focl-eval for focl)");
  }
  c.out << (holds ? "true" : "false") << "\n";
  return holds ? kExitOk : kExitFail;
}

int cmd_fnf(const Ctx& c, const FormulaInput& in, const std::string& format) {
  const Dialect d = in.dialect_or(Dialect::wpcl);
  if (d == Dialect::focl || d == Dialect::wfocl) {
    throw UsageError("normal forms are defined for propositional formulas only");
  }
  const SemiringId k = in.semiring_id();
  const WFormula z = d == Dialect::pil ? w_bool(pcl_interaction(parse_pil(in.text())))
                                       : parse_weighted(in.text(), Dialect::wpcl, in.parse_options());
  std::set<Port> ports;
  collect(z, ports);
  const PortUniverse u = universe_for(in, ports);
  const FullNormalForm n = fnf_of_wpcl(z, u, k);
  if (format == "text") {
    c.out << fnf_to_text(n);
  } else if (format == "tsv") {
    c.out << fnf_to_tsv(n);
  } else {
    throw UsageError("unknown format '" + format + "' (text or tsv)");
  }
  return kExitOk;
}

int cmd_equiv(const Ctx& c, FormulaInput in, const std::vector<std::string>& files,
              const std::vector<std::string>& exprs, const std::string& method) {
  std::vector<std::string> texts;
  Dialect d = Dialect::wpcl;
  if (!in.dialect.empty()) d = parse_dialect(in.dialect);
  for (const auto& f : files) {
    texts.push_back(read_file(f));
    if (in.dialect.empty()) d = dialect_of_path(f);
  }
  for (const auto& e : exprs) texts.push_back(e);
  if (texts.size() != 2) throw UsageError("equiv needs exactly two formulas (files or -e)");
  if (d == Dialect::focl || d == Dialect::wfocl) {
    throw UsageError("equivalence is decided for propositional formulas only");
  }
  const SemiringId k = in.semiring_id();
  std::set<Port> ports;
  if (d == Dialect::pcl || d == Dialect::pil) {
    auto read = [&](const std::string& t) {
      return d == Dialect::pil ? pcl_interaction(parse_pil(t)) : parse_boolean(t, Dialect::pcl);
    };
    const Formula a = read(texts[0]), b = read(texts[1]);
    collect(a, ports);
    collect(b, ports);
    const PortUniverse u = universe_for(in, ports);
    if (auto w = pcl_difference(a, b, u)) {
      c.out << "not equivalent\n";
      c.out << "witness " << configuration_to_string(*w, u) << "\n";
      c.out << "left " << (pcl_satisfies(*w, a, u) ? "true" : "false") << "\n";
      c.out << "right " << (pcl_satisfies(*w, b, u) ? "true" : "false") << "\n";
      return kExitFail;
    }
    c.out << "equivalent\n";
    return kExitOk;
  }
  const ParseOptions po = in.parse_options();
  const WFormula a = parse_weighted(texts[0], Dialect::wpcl, po);
  const WFormula b = parse_weighted(texts[1], Dialect::wpcl, po);
  collect(a, ports);
  collect(b, ports);
  const PortUniverse u = universe_for(in, ports);
  if (method == "fnf") {
    const FullNormalForm na = fnf_of_wpcl(a, u, k), nb = fnf_of_wpcl(b, u, k);
    if (fnf_equiv(na, nb)) {
      c.out << "equivalent\n";
      return kExitOk;
    }
  } else if (method != "enumerate") {
    throw UsageError("unknown method '" + method + "' (enumerate or fnf)");
  }
  const EquivResult r = wpcl_equiv(a, b, u, k, kDefaultEnumerationCap, kDefaultTolerance,
                                   in.eval_options());
  if (r.equivalent) {
    c.out << "equivalent\n";
    return kExitOk;
  }
  c.out << "not equivalent\n";
  c.out << "witness " << configuration_to_string(*r.witness, u) << "\n";
  c.out << "left " << to_string(*r.left) << "\n";
  c.out << "right " << to_string(*r.right) << "\n";
  return kExitFail;
}

int cmd_focl_eval(const Ctx& c, const FormulaInput& in, const std::string& model_path,
                  const std::string& config) {
  if (model_path.empty()) throw UsageError("focl-eval needs --model");
  if (config.empty()) throw UsageError("focl-eval needs --config");
  const Model b = Model::parse(read_file(model_path));
  const Dialect d = in.dialect_or(Dialect::wfocl);
  const std::string cfg = configuration_text(config);
  std::set<Port> ports;
  const PortUniverse mu = b.ports();
  for (const auto& p : mu.ports()) ports.insert(p);
  collect_literal(cfg, ports);
  const PortUniverse gu(std::vector<Port>(ports.begin(), ports.end()));
  const Configuration g = parse_configuration(cfg, gu);
  if (d == Dialect::focl || d == Dialect::pcl) {
    const bool holds = focl_satisfies(b, gu, g, parse_boolean(in.text(), Dialect::focl),
                                      in.eval_options());
    c.out << (holds ? "true" : "false") << "\n";
    return holds ? kExitOk : kExitFail;
  }
  if (d == Dialect::pil) throw UsageError("focl-eval takes focl or wfocl formulas");
  const WFormula z = parse_weighted(in.text(), Dialect::wfocl, in.parse_options());
  c.out << to_string(wfocl_eval(z, b, gu, g, in.semiring_id(), in.eval_options())) << "\n";
  return kExitOk;
}

int cmd_tsp(const Ctx& c, const std::string& matrix, const std::string& strategy,
            bool show_formula) {
  if (matrix.empty()) throw UsageError("tsp needs --matrix FILE.csv");
  const DistanceMatrix d = DistanceMatrix::parse_csv(read_file(matrix));
  FormulaInput opts;
  opts.strategy = strategy;
  const WpclInstance inst = tsp_instance(d);
  const Value v = wpcl_evaluate(inst.formula, inst.config, inst.ports, SemiringId::minplus,
                                opts.eval_options());
  const Value brute = Value::real(SemiringId::minplus, tsp_brute_force(d));
  c.out << "cities " << d.size() << "\n";
  c.out << "tours " << cyclic_tours(d.size()).size() << "\n";
  if (show_formula) c.out << "formula " << to_string(inst.formula) << "\n";
  c.out << "optimum " << to_string(v) << "\n";
  c.out << "brute-force " << to_string(brute) << "\n";
  if (!approx_equal(v, brute)) {
    c.err << "formula value and brute force disagree\n";
    return kExitFail;
  }
  return kExitOk;
}

WeightTable default_master_slave(SemiringId k) {
  // Three slaves, two masters.
  WeightTable w(3, 2, k);
  const std::uint64_t vals[3][2] = {{1, 2}, {3, 1}, {2, 3}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      w.set(i, j, k == SemiringId::natural ? Value::natural(vals[i][j])
                  : k == SemiringId::boolean ? Value::boolean(true)
                  : (k == SemiringId::viterbi || k == SemiringId::fuzzy)
                      ? Value::real(k, static_cast<double>(vals[i][j]) / 4)
                      : Value::real(k, static_cast<double>(vals[i][j])));
    }
  }
  return w;
}

int cmd_master_slave(const Ctx& c, const std::string& weights, const std::string& semiring,
                     bool first_order, bool show_formula) {
  const SemiringId k = parse_semiring_id(semiring);
  const WeightTable w =
      weights.empty() ? default_master_slave(k) : WeightTable::parse_csv(read_file(weights), k);
  const Value brute = master_slave_brute_force(w);
  Value v;
  if (first_order) {
    const WfoclInstance inst = master_slave_wfocl(w);
    if (show_formula) c.out << "formula " << to_string(inst.formula) << "\n";
    v = wfocl_eval(inst.formula, inst.model, inst.config, k);
  } else {
    const WpclInstance inst = master_slave_wpcl(w);
    if (show_formula) c.out << "formula " << to_string(inst.formula) << "\n";
    v = wpcl_evaluate(inst.formula, inst.config, inst.ports, k);
  }
  c.out << "slaves " << w.rows() << "\n";
  c.out << "masters " << w.cols() << "\n";
  c.out << "value " << to_string(v) << "\n";
  c.out << "assignments " << to_string(brute) << "\n";
  if (!approx_equal(v, brute)) {
    c.err << "formula value and assignment enumeration disagree\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_pubsub(const Ctx& c, const std::string& priorities, const std::string& semiring,
               bool show_formula) {
  const SemiringId k = parse_semiring_id(semiring);
  WeightTable w(3, 2, k);
  if (priorities.empty()) {
    const double vals[3][2] = {{0.9, 0.4}, {0.7, 0.6}, {0.3, 0.8}};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 2; ++j) w.set(i, j, Value::real(k, vals[i][j]));
    }
  } else {
    w = WeightTable::parse_csv(read_file(priorities), k);
  }
  const WfoclInstance inst = pubsub_instance(w);
  if (show_formula) c.out << "formula " << to_string(inst.formula) << "\n";
  const Value v = wfocl_eval(inst.formula, inst.model, inst.config, k);
  const Value expected = otimes(w.at(0, 0), w.at(2, 1));
  c.out << "configuration " << configuration_to_string(inst.config, inst.model.ports()) << "\n";
  c.out << "value " << to_string(v) << "\n";
  c.out << "expected " << to_string(expected) << "\n";
  if (!approx_equal(v, expected)) {
    c.err << "value differs from the product of the two chosen priorities\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_selftest(const Ctx& c, const std::string& filter, bool perturb, std::uint64_t seed) {
  checks::AcceptanceOptions o;
  o.filter = filter;
  o.perturb_fixture = perturb;
  o.seed = seed;
  const auto results = checks::run_acceptance(o);
  if (results.empty()) throw UsageError("no criterion matches filter '" + filter + "'");
  bool all = true;
  for (const auto& r : results) {
    c.out << checks::summary_line(r) << "\n";
    for (const auto& n : r.notes) c.out << "    " << n << "\n";
    all = all && r.passed();
  }
  return all ? kExitOk : kExitFail;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted configuration logics: evaluation, normal forms and checks", "wcl"};
  app.require_subcommand(1);
  Ctx ctx{out, err};
  std::function<int()> run;

  std::string config, interaction, format = "text", method = "enumerate", model;
  std::vector<std::string> files, exprs;

  FormulaInput eval_in;
  auto* eval = app.add_subcommand("eval", "Weight of a configuration under a weighted formula");
  eval_in.add(eval);
  eval->add_option("-c,--config", config, "Configuration literal or .cfg file");
  eval->add_option("--interaction", interaction, "Interaction literal, for interaction formulas");
  eval->callback([&] { run = [&] { return cmd_eval(ctx, eval_in, config, interaction); }; });

  FormulaInput sat_in;
  auto* sat = app.add_subcommand("satisfies", "Whether a configuration satisfies a formula");
  sat_in.add(sat);
  sat->add_option("-c,--config", config, "Configuration literal or .cfg file");
  sat->add_option("--interaction", interaction, "Interaction literal, for pil formulas");
  sat->callback([&] { run = [&] { return cmd_satisfies(ctx, sat_in, config, interaction); }; });

  FormulaInput fnf_in;
  auto* fnf = app.add_subcommand("fnf", "Full normal form of a weighted formula");
  fnf_in.add(fnf);
  fnf->add_option("--format", format, "text or tsv")->capture_default_str();
  fnf->callback([&] { run = [&] { return cmd_fnf(ctx, fnf_in, format); }; });

  FormulaInput eq_in;
  auto* eq = app.add_subcommand("equiv", "Decide equivalence of two formulas");
  eq_in.add(eq, false);
  eq->add_option("files", files, "Two formula files");
  eq->add_option("-e,--expr", exprs, "Formula text (give twice)");
  eq->add_option("--method", method, "enumerate or fnf")->capture_default_str();
  eq->callback([&] { run = [&] { return cmd_equiv(ctx, eq_in, files, exprs, method); }; });

  FormulaInput focl_in;
  auto* focl = app.add_subcommand("focl-eval", "Evaluate a first-order formula on a model");
  focl_in.add(focl);
  focl->add_option("-m,--model", model, "Model file");
  focl->add_option("-c,--config", config, "Configuration literal or .cfg file");
  focl->callback([&] { run = [&] { return cmd_focl_eval(ctx, focl_in, model, config); }; });

  std::string matrix, tsp_strategy = "sparse";
  bool show_formula = false;
  auto* tsp = app.add_subcommand("tsp", "Shortest tour via the min-plus formula, with brute force");
  tsp->add_option("--matrix", matrix, "Symmetric distance matrix, CSV")->required();
  tsp->add_option("--strategy", tsp_strategy, "auto, direct or sparse")->capture_default_str();
  tsp->add_flag("--show-formula", show_formula, "Print the formula too");
  tsp->callback([&] { run = [&] { return cmd_tsp(ctx, matrix, tsp_strategy, show_formula); }; });

  auto* example = app.add_subcommand("example", "Architecture style examples");
  example->require_subcommand(1);
  std::string weights, ms_semiring = "maxplus", priorities, ps_semiring = "viterbi";
  bool first_order = false;
  auto* ms = example->add_subcommand("master-slave", "Each slave attached to one master");
  ms->add_option("--weights", weights, "CSV, one row per slave, one column per master");
  ms->add_option("-k,--semiring", ms_semiring, "Semiring")->capture_default_str();
  ms->add_flag("--first-order", first_order, "Use the first-order formula over a model");
  ms->add_flag("--show-formula", show_formula, "Print the formula too");
  ms->callback([&] {
    run = [&] { return cmd_master_slave(ctx, weights, ms_semiring, first_order, show_formula); };
  });
  auto* ps = example->add_subcommand("pubsub", "Publish/Subscribe with subscriber priorities");
  ps->add_option("--priorities", priorities, "CSV, 3 topics by 2 subscribers");
  ps->add_option("-k,--semiring", ps_semiring, "Semiring")->capture_default_str();
  ps->add_flag("--show-formula", show_formula, "Print the formula too");
  ps->callback([&] { run = [&] { return cmd_pubsub(ctx, priorities, ps_semiring, show_formula); }; });

  std::string filter;
  bool perturb = false;
  std::uint64_t seed = checks::AcceptanceOptions{}.seed;
  auto* self = app.add_subcommand("selftest", "Run the acceptance checks");
  self->add_option("--filter", filter, "Only criteria whose tag contains this text");
  self->add_flag("--perturb-fixture", perturb, "Alter the pinned TSP fixture (should FAIL)");
  self->add_option("--seed", seed, "Random seed")->capture_default_str();
  self->callback([&] { run = [&] { return cmd_selftest(ctx, filter, perturb, seed); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wcl: " << e.what() << "\n";
    err << "run 'wcl --help' for usage\n";
    return kExitUsage;
  }

  try {
    return run ? run() : kExitUsage;
  } catch (const ParseError& e) {
    err << "wcl: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "wcl: too large: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "wcl: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wcl
