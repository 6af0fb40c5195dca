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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wstl/formula.hpp"
#include "wstl/signal.hpp"

namespace wstl {

/// Quantitative semantics. All four share one recursion over the formula and
/// differ only in how And/G (meet) and Or/F (join) aggregate their operands.
enum class Engine {
  traditional,           ///< min / max, weights ignored
  weighted_traditional,  ///< min / max of sign-dependent weighted terms
  weighted_agm,          ///< weighted arithmetic / geometric means
  weighted_smooth,       ///< log-sum-exp min, softmax-weighted max, tanh sign
};

const char* to_string(Engine engine) noexcept;
/// Accepts "traditional", "weighted-traditional", "agm", "smooth" and the
/// short forms "trad", "wtrad". Throws Error(invalid_argument).
Engine engine_from_string(std::string_view name);

enum class Verdict { yes, no, inconclusive };

const char* to_string(Verdict verdict) noexcept;

/// Yes iff value > epsilon, No iff value < -epsilon.
Verdict verdict_of(double value, double epsilon) noexcept;

struct SemanticsConfig {
  Engine engine = Engine::weighted_traditional;
  double beta = 10.0;    ///< sharpness, smooth engine only; > 0
  double epsilon = 0.0;  ///< verdict dead band; >= 0

  /// Throws Error(invalid_argument) unless beta > 0 and epsilon >= 0.
  void validate() const;
};

/// Dead band that keeps the smooth engine's verdicts sound: ln(max_arity)/beta.
double default_smooth_epsilon(const Formula& f, double beta);

/// Aggregators shared by the engines. `weights` are normalized.
namespace aggregate {

double softmin(std::span<const double> x, double beta);
/// sum x_i e^{beta x_i} / sum e^{beta x_i}
double softmax(std::span<const double> x, double beta);

double meet(Engine engine, std::span<const double> weights, std::span<const double> x,
            double beta);
double join(Engine engine, std::span<const double> weights, std::span<const double> x,
            double beta);

}  // namespace aggregate

/// Robustness of `f` on `signal` at time `t` under `engine`. Throws
/// Error(horizon_exceeds_signal) if t + horizon(f) is past the last sample and
/// Error(invalid_argument) if a predicate names a missing component.
double robustness(Engine engine, const Formula& f, const Signal& signal, TimeStep t = 0,
                  double beta = 10.0);

double rob_traditional(const Formula& f, const Signal& signal, TimeStep t = 0);
double rob_weighted_traditional(const Formula& f, const Signal& signal, TimeStep t = 0);
double rob_weighted_agm(const Formula& f, const Signal& signal, TimeStep t = 0);
double rob_weighted_smooth(const Formula& f, const Signal& signal, TimeStep t, double beta);

/// Robustness together with its gradient with respect to every signal
/// sample. Only the smooth engine is differentiable; other engines throw
/// Error(non_smooth_engine).
struct RobustnessGradient {
  double value = 0.0;
  /// Same row-major layout as Signal::flat().
  std::vector<double> d_signal;
};

RobustnessGradient robustness_gradient(const Formula& f, const Signal& signal, TimeStep t,
                                       double beta);

/// Values a node took during one evaluation, keyed by time.
struct NodeTrace {
  std::string formula;
  std::map<TimeStep, double> values;
};

struct RobustnessReport {
  double value = 0.0;
  Verdict verdict = Verdict::inconclusive;
  /// Keyed by AST path: "root", "root.0", "root.0.1", ...
  std::optional<std::map<std::string, NodeTrace>> trace;
};

RobustnessReport evaluate(const Formula& f, const Signal& signal, TimeStep t,
                          const SemanticsConfig& config, bool with_trace = false);

/// Qualitative satisfaction: sign of traditional robustness of the unweighted
/// formula, Inconclusive when |rho| <= epsilon.
Verdict satisfies(const Formula& f, const Signal& signal, TimeStep t,
                  const SemanticsConfig& config = {});

struct RankedSignal {
  std::size_t index = 0;  ///< position in the input list
  double value = 0.0;
};

/// Signals by descending robustness under config.engine; stable on ties.
std::vector<RankedSignal> rank_signals(const Formula& f, std::span<const Signal> signals,
                                       const SemanticsConfig& config, TimeStep t = 0);

}  // namespace wstl
