// Copyright 2026 The wstl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wstl/error.hpp"
#include "wstl/parser.hpp"
#include "wstl/problem_io.hpp"
#include "wstl/semantics.hpp"
#include "wstl/signal.hpp"
#include "wstl/synthesis.hpp"

namespace wstl::cli {
namespace {

namespace fs = std::filesystem;

// Six significant digits, independent of the global locale.
std::string fmt6(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

nlohmann::json json6(double v) {
  if (!std::isfinite(v)) return fmt6(v);
  double rounded = 0.0;
  const std::string s = fmt6(v);
  std::from_chars(s.data(), s.data() + s.size(), rounded);
  return rounded;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(Errc::io, "short write to '" + path.string() + "'");
}

// A formula argument naming an existing file is read from that file.
Formula load_formula(const std::string& arg) {
  std::error_code ec;
  if (arg.size() < 4096 && fs::is_regular_file(arg, ec)) return parse_formula(read_file(arg));
  return parse_formula(arg);
}

Signal load_signal(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open signal '" + path + "'");
  return signal_from_csv(in);
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::yes: return 0;
    case Verdict::no: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 2;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::io: return kExitNoInput;
    default: return kExitData;
  }
}

struct MonitorArgs {
  std::string formula;
  std::string signal;
  std::string engine = "weighted-traditional";
  double beta = 10.0;
  double epsilon = 0.0;
  bool epsilon_given = false;
  TimeStep time = 0;
  bool trace = false;
};

struct CompareArgs {
  std::string formula;
  std::vector<std::string> signals;
  std::string engine = "weighted-traditional";
  double beta = 10.0;
  TimeStep time = 0;
};

struct SynthesizeArgs {
  std::string config;
  std::string out_dir = ".";
};

struct GradcheckArgs {
  std::string config;
  double h = 1e-5;
};

struct ParseArgs {
  std::string formula;
  bool print_ast = false;
};

const std::vector<std::string> kEngines = {
    "traditional", "trad", "weighted-traditional", "weighted_traditional", "wtrad",
    "agm", "weighted-agm", "weighted_agm", "smooth", "weighted-smooth", "weighted_smooth"};

int monitor(const MonitorArgs& a, std::ostream& out, std::ostream& err) {
  SemanticsConfig cfg;
  cfg.engine = engine_from_string(a.engine);
  cfg.beta = a.beta;
  cfg.epsilon = a.epsilon;
  cfg.validate();
  const Formula f = load_formula(a.formula);
  const Signal s = load_signal(a.signal);
  if (cfg.engine == Engine::weighted_smooth && !a.epsilon_given) {
    cfg.epsilon = default_smooth_epsilon(f, cfg.beta);
    err << "warning: smooth robustness is only sound with epsilon tuned to beta; using epsilon = "
        << fmt6(cfg.epsilon) << " (ln N_max / beta)\n";
  }
  const RobustnessReport report = evaluate(f, s, a.time, cfg, a.trace);
  if (!a.trace) {
    out << fmt6(report.value) << '\n' << to_string(report.verdict) << '\n';
    return exit_for(report.verdict);
  }
  nlohmann::ordered_json doc;
  doc["formula"] = to_string(f);
  doc["engine"] = to_string(cfg.engine);
  doc["time"] = a.time;
  doc["epsilon"] = json6(cfg.epsilon);
  doc["value"] = json6(report.value);
  doc["verdict"] = to_string(report.verdict);
  nlohmann::ordered_json nodes = nlohmann::ordered_json::object();
  for (const auto& [path, node] : *report.trace) {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [t, v] : node.values) values[std::to_string(t)] = json6(v);
    nodes[path] = {{"formula", node.formula}, {"values", std::move(values)}};
  }
  doc["nodes"] = std::move(nodes);
  out << doc.dump(2) << '\n';
  return exit_for(report.verdict);
}

int compare(const CompareArgs& a, std::ostream& out) {
  SemanticsConfig cfg;
  cfg.engine = engine_from_string(a.engine);
  cfg.beta = a.beta;
  cfg.validate();
  const Formula f = load_formula(a.formula);
  std::vector<Signal> signals;
  for (const auto& path : a.signals) signals.push_back(load_signal(path));
  const auto ranked = rank_signals(f, signals, cfg, a.time);
  out << pad("rank", 6) << pad("value", 14) << "signal\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    out << pad(std::to_string(i + 1), 6) << pad(fmt6(ranked[i].value), 14)
        << a.signals[ranked[i].index] << '\n';
  }
  return 0;
}

int synthesize_cmd(const SynthesizeArgs& a, std::ostream& out) {
  if (!fs::is_regular_file(a.config)) throw Error(Errc::io, "cannot open config '" + a.config + "'");
  const ProblemConfig cfg = load_problem(a.config);
  if (cfg.problem.semantics.engine != Engine::weighted_smooth) {
    throw Error(Errc::non_smooth_engine, std::string("synthesize needs the smooth engine, config asks for ") +
                                             to_string(cfg.problem.semantics.engine));
  }
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) throw Error(Errc::io, "cannot create '" + a.out_dir + "': " + ec.message());
  const SynthesisResult r = synthesize(cfg.problem, cfg.options);
  write_file(fs::path(a.out_dir) / "trajectory.csv", trajectory_csv(cfg.problem, r));
  write_file(fs::path(a.out_dir) / "summary.json", summary_json(r));
  out << pad("objective", 19) << fmt6(r.objective) << '\n'
      << pad("robustness_smooth", 19) << fmt6(r.robustness_smooth) << '\n'
      << pad("robustness_exact", 19) << fmt6(r.robustness_exact) << '\n'
      << pad("satisfied", 19) << to_string(r.satisfied) << '\n'
      << pad("iterations", 19) << r.iterations << '\n'
      << pad("wall_time_ms", 19) << fmt6(r.wall_time_ms) << '\n';
  return exit_for(r.satisfied);
}

int gradcheck(const GradcheckArgs& a, std::ostream& out) {
  if (!(a.h > 0.0)) throw Error(Errc::invalid_argument, "--h must be > 0");
  if (!fs::is_regular_file(a.config)) throw Error(Errc::io, "cannot open config '" + a.config + "'");
  const ProblemConfig cfg = load_problem(a.config);
  const InputSequence u = random_inputs(*cfg.problem.system, cfg.problem.horizon, cfg.options.seed);
  const InputSequence analytic = gradient(cfg.problem, u, GradientMode::analytic);
  const InputSequence fd = gradient(cfg.problem, u, GradientMode::central_difference, a.h);
  double worst = 0.0;
  for (std::size_t k = 0; k < u.flat().size(); ++k) {
    worst = std::max(worst, std::abs(analytic.flat()[k] - fd.flat()[k]));
  }
  out << pad("entries", 15) << u.flat().size() << '\n'
      << pad("h", 15) << fmt6(a.h) << '\n'
      << pad("max_abs_error", 15) << fmt6(worst) << '\n';
  return 0;
}

int parse_cmd(const ParseArgs& a, std::ostream& out) {
  const Formula f = load_formula(a.formula);
  out << to_string(f) << '\n';
  if (a.print_ast) out << ast_dump(f);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted signal temporal logic: monitoring, ranking and control synthesis", "wstl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  MonitorArgs mon;
  auto* mon_cmd = app.add_subcommand("monitor", "Robustness and verdict of one signal");
  mon_cmd->add_option("formula", mon.formula, "Formula text or a file containing it")->required();
  mon_cmd->add_option("signal", mon.signal, "Signal CSV")->required();
  mon_cmd->add_option("--engine,-e", mon.engine, "Robustness engine")
      ->check(CLI::IsMember(kEngines))
      ->capture_default_str();
  mon_cmd->add_option("--beta,-b", mon.beta, "Smooth engine sharpness")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* eps_opt = mon_cmd->add_option("--epsilon", mon.epsilon, "Verdict dead band")
                      ->check(CLI::NonNegativeNumber);
  mon_cmd->add_option("--time,-t", mon.time, "Evaluation time step")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  mon_cmd->add_flag("--trace", mon.trace, "Dump per-node robustness as JSON");

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Rank signals by robustness");
  cmp_cmd->add_option("formula", cmp.formula, "Formula text or a file containing it")->required();
  cmp_cmd->add_option("signals", cmp.signals, "Signal CSVs")->required();
  cmp_cmd->add_option("--engine,-e", cmp.engine, "Robustness engine")
      ->check(CLI::IsMember(kEngines))
      ->capture_default_str();
  cmp_cmd->add_option("--beta,-b", cmp.beta, "Smooth engine sharpness")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmp_cmd->add_option("--time,-t", cmp.time, "Evaluation time step")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  SynthesizeArgs syn;
  auto* syn_cmd = app.add_subcommand("synthesize", "Optimize control inputs for a problem config");
  syn_cmd->add_option("config", syn.config, "Problem config JSON")->required();
  syn_cmd->add_option("--out-dir,-o", syn.out_dir, "Directory for trajectory.csv and summary.json")
      ->capture_default_str();

  GradcheckArgs gc;
  auto* gc_cmd = app.add_subcommand("gradcheck", "Compare analytic and finite-difference gradients");
  gc_cmd->set_help_flag("--help", "Print this help message and exit");
  gc_cmd->add_option("config", gc.config, "Problem config JSON")->required();
  gc_cmd->add_option("--h", gc.h, "Central-difference step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ParseArgs pa;
  auto* parse_sub = app.add_subcommand("parse", "Print the canonical form of a formula");
  parse_sub->add_option("formula", pa.formula, "Formula text or a file containing it")->required();
  parse_sub->add_flag("--print-ast", pa.print_ast, "Also print the syntax tree");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  mon.epsilon_given = eps_opt->count() > 0;

  try {
    if (*mon_cmd) return monitor(mon, out, err);
    if (*cmp_cmd) return compare(cmp, out);
    if (*syn_cmd) return synthesize_cmd(syn, out);
    if (*gc_cmd) return gradcheck(gc, out);
    if (*parse_sub) return parse_cmd(pa, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace wstl::cli
