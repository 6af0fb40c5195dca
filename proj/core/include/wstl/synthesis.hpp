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
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "wstl/dynamics.hpp"
#include "wstl/formula.hpp"
#include "wstl/semantics.hpp"
#include "wstl/signal.hpp"

namespace wstl {

/// u(0) ... u(T-1), row-major, one row of input_dim values per step.
class InputSequence {
 public:
  InputSequence() = default;
  InputSequence(std::size_t steps, std::size_t width, double fill = 0.0)
      : steps_(steps), width_(width), data_(steps * width, fill) {}

  std::size_t steps() const noexcept { return steps_; }
  std::size_t width() const noexcept { return width_; }

  std::span<double> row(std::size_t t) { return {data_.data() + t * width_, width_}; }
  std::span<const double> row(std::size_t t) const { return {data_.data() + t * width_, width_}; }

  std::vector<double>& flat() noexcept { return data_; }
  const std::vector<double>& flat() const noexcept { return data_; }

  friend bool operator==(const InputSequence&, const InputSequence&) = default;

 private:
  std::size_t steps_ = 0;
  std::size_t width_ = 0;
  std::vector<double> data_;
};

/// Maximize robustness(formula, trajectory) - lambda * J(u) over admissible
/// inputs, with J(u) = 1/2 sum_t |u(t)|^2.
struct SynthesisProblem {
  std::shared_ptr<const DynamicalSystem> system;
  std::vector<double> q0;
  std::size_t horizon = 0;  ///< T, number of inputs
  Formula formula;
  double lambda = 0.0;
  SemanticsConfig semantics{Engine::weighted_smooth, 10.0, 0.0};

  /// Throws Error(invalid_argument) on shape mismatches, T < horizon(formula)
  /// or lambda < 0.
  void validate() const;
};

struct SynthesisOptions {
  std::size_t restarts = 8;
  std::size_t max_iters = 500;
  std::uint64_t seed = 0;
  double initial_step = 0.1;  ///< scaled by the mean input-box width
  double gradient_tol = 1e-5;
  double armijo = 1e-4;
  /// Start 0 from the center of U instead of a random draw. Symmetric
  /// problems then break ties through the formula weights alone.
  bool center_start = true;

  /// Called after every accepted step with the start index, the new iterate
  /// and the value of the function being ascended. That function is the
  /// robustness alone until the start first satisfies the formula, then the
  /// full objective; `feasible` says which.
  std::function<void(std::size_t start, const InputSequence& u, double merit, bool feasible)>
      on_iterate;
};

struct SynthesisResult {
  InputSequence inputs;
  Signal trajectory;
  double objective = 0.0;
  double robustness_smooth = 0.0;
  /// Traditional robustness of the unweighted formula on `trajectory`.
  double robustness_exact = 0.0;
  Verdict satisfied = Verdict::inconclusive;
  std::size_t iterations = 0;        ///< accepted steps of the selected start
  std::size_t total_iterations = 0;  ///< over all starts
  std::size_t best_start = 0;
  double wall_time_ms = 0.0;
};

/// States q(0) = q0, q(t+1) = f(q(t), u(t)); components named after the
/// system's state. Throws Error(input_out_of_bounds) for inputs outside U.
Signal simulate(const DynamicalSystem& system, std::span<const double> q0,
                const InputSequence& inputs);

double input_cost(const InputSequence& inputs);

/// robustness(engine) of the simulated trajectory at t = 0 minus lambda * J.
double objective(const SynthesisProblem& problem, const InputSequence& inputs);

enum class GradientMode { analytic, central_difference };

/// d objective / d u, shaped like `inputs`. Analytic mode needs the smooth
/// engine and throws Error(non_smooth_engine) otherwise.
InputSequence gradient(const SynthesisProblem& problem, const InputSequence& inputs,
                       GradientMode mode = GradientMode::analytic, double h = 1e-5);

/// Inputs drawn uniformly from the input box.
InputSequence random_inputs(const DynamicalSystem& system, std::size_t steps,
                            std::uint64_t seed);

/// Multi-start projected gradient ascent with Armijo backtracking on the
/// constrained problem: a start ascends robustness alone until the exact
/// robustness of the unweighted formula clears epsilon, then ascends the full
/// objective without leaving that set. Returns the best start that clears
/// epsilon, or the best start overall when none does. Deterministic for fixed
/// options.
SynthesisResult synthesize(const SynthesisProblem& problem, const SynthesisOptions& options = {});

/// One start of the same ascent from a caller-chosen initial guess, projected
/// onto U first. Options other than max_iters and the step rule are ignored.
SynthesisResult synthesize_from(const SynthesisProblem& problem, const InputSequence& initial,
                                const SynthesisOptions& options = {});

}  // namespace wstl
