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


#include "wstl/problem_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "numfmt.hpp"
#include "wstl/error.hpp"
#include "wstl/parser.hpp"

namespace wstl {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw Error(Errc::config, message); }

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const char* where) {
  std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) fail(std::string("unknown key '") + key + "' in " + where);
  }
}

template <typename T>
T get_as(const json& value, const char* key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    fail(std::string("key '") + key + "' has the wrong type");
  }
}

std::vector<double> numbers(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_array()) fail(std::string("key '") + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) fail(std::string("key '") + key + "' must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::size_t count(const json& obj, const char* key, std::size_t fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_unsigned()) fail(std::string("key '") + key + "' must be a non-negative integer");
  return it->get<std::size_t>();
}

std::string formula_text(const std::string& value, const std::filesystem::path& base_dir) {
  std::error_code ec;
  const auto candidate = base_dir / value;
  if (value.size() < 4096 && std::filesystem::is_regular_file(candidate, ec)) {
    std::ifstream in(candidate);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return value;
}

std::shared_ptr<const DynamicalSystem> make_system(const json& spec) {
  if (!spec.is_object()) fail("'system' must be an object");
  reject_unknown(spec, {"type", "params"}, "system");
  const auto type = get_as<std::string>(require(spec, "type"), "type");
  const json& params = require(spec, "params");
  if (!params.is_object()) fail("'system.params' must be an object");
  try {
    if (type == "unicycle") {
      reject_unknown(params, {"input_lo", "input_hi"}, "system.params");
      return std::make_shared<Unicycle>(numbers(params, "input_lo"), numbers(params, "input_hi"));
    }
    if (type == "single_integrator") {
      reject_unknown(params, {"input_lo", "input_hi", "states"}, "system.params");
      auto states = get_as<std::vector<std::string>>(require(params, "states"), "states");
      return std::make_shared<SingleIntegrator>(std::move(states), numbers(params, "input_lo"),
                                                numbers(params, "input_hi"));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::config) throw;
    fail(std::string("system: ") + e.what());
  }
  fail("unknown system type '" + type + "' (expected unicycle or single_integrator)");
}

}  // namespace

ProblemConfig problem_from_json(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config must be a JSON object");
  reject_unknown(doc,
                 {"system", "q0", "T", "formula", "lambda", "engine", "beta", "epsilon", "optimizer"},
                 "config");

  ProblemConfig cfg;
  SynthesisProblem& p = cfg.problem;
  p.system = make_system(require(doc, "system"));
  p.q0 = numbers(doc, "q0");
  p.horizon = count(doc, "T", 0);
  p.formula = parse_formula(formula_text(get_as<std::string>(require(doc, "formula"), "formula"), base_dir));
  if (doc.contains("lambda")) p.lambda = get_as<double>(doc["lambda"], "lambda");
  if (doc.contains("engine")) {
    try {
      p.semantics.engine = engine_from_string(get_as<std::string>(doc["engine"], "engine"));
    } catch (const Error& e) {
      if (e.code() == Errc::config) throw;
      fail(e.what());
    }
  }
  if (doc.contains("beta")) p.semantics.beta = get_as<double>(doc["beta"], "beta");
  if (doc.contains("epsilon")) p.semantics.epsilon = get_as<double>(doc["epsilon"], "epsilon");

  if (doc.contains("optimizer")) {
    const json& opt = doc["optimizer"];
    if (!opt.is_object()) fail("'optimizer' must be an object");
    reject_unknown(opt, {"restarts", "max_iters", "seed", "center_start"}, "optimizer");
    cfg.options.restarts = count(opt, "restarts", cfg.options.restarts);
    cfg.options.max_iters = count(opt, "max_iters", cfg.options.max_iters);
    cfg.options.seed = count(opt, "seed", cfg.options.seed);
    if (opt.contains("center_start")) {
      cfg.options.center_start = get_as<bool>(opt["center_start"], "center_start");
    }
  }

  try {
    p.validate();
  } catch (const Error& e) {
    if (e.code() == Errc::horizon_exceeds_signal) throw;
    fail(e.what());
  }
  return cfg;
}

ProblemConfig load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return problem_from_json(buf.str(), path.parent_path());
}

std::string trajectory_csv(const SynthesisProblem& problem, const SynthesisResult& result) {
  const auto& sys = *problem.system;
  std::string out = "t";
  for (const auto& n : sys.state_names()) out += "," + n;
  for (const auto& n : sys.input_names()) out += "," + n;
  out += '\n';
  for (std::size_t t = 0; t < result.trajectory.length(); ++t) {
    out += std::to_string(t);
    for (std::size_t c = 0; c < sys.state_dim(); ++c) {
      out += "," + detail::shortest(result.trajectory.at(t, c));
    }
    for (std::size_t i = 0; i < sys.input_dim(); ++i) {
      out += ',';
      if (t < result.inputs.steps()) out += detail::shortest(result.inputs.row(t)[i]);
    }
    out += '\n';
  }
  return out;
}

std::string summary_json(const SynthesisResult& result) {
  json doc = json::object();
  doc["objective"] = result.objective;
  doc["robustness_smooth"] = result.robustness_smooth;
  doc["robustness_exact"] = result.robustness_exact;
  doc["satisfied"] = to_string(result.satisfied);
  doc["iterations"] = result.iterations;
  doc["total_iterations"] = result.total_iterations;
  doc["best_start"] = result.best_start;
  doc["wall_time_ms"] = result.wall_time_ms;
  return doc.dump(2) + "\n";
}

}  // namespace wstl
