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


#include "wstl/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "wstl/error.hpp"

namespace wstl {
namespace {

void check_shape(const DynamicalSystem& system, std::span<const double> q0,
                 const InputSequence& inputs) {
  if (q0.size() != system.state_dim()) {
    throw Error(Errc::length_mismatch, "q0 has " + std::to_string(q0.size()) + " entries, system has " +
                                           std::to_string(system.state_dim()) + " states");
  }
  if (inputs.width() != system.input_dim()) {
    throw Error(Errc::length_mismatch, "input rows have " + std::to_string(inputs.width()) +
                                           " entries, system has " +
                                           std::to_string(system.input_dim()) + " inputs");
  }
}

// Unchecked rollout; finite differences may step just outside the box.
Signal rollout(const DynamicalSystem& system, std::span<const double> q0,
               const InputSequence& inputs) {
  const std::size_t n = system.state_dim();
  std::vector<double> data((inputs.steps() + 1) * n);
  std::copy(q0.begin(), q0.end(), data.begin());
  for (std::size_t t = 0; t < inputs.steps(); ++t) {
    std::span<const double> q(data.data() + t * n, n);
    std::span<double> next(data.data() + (t + 1) * n, n);
    system.step(q, inputs.row(t), next);
  }
  for (double v : data) {
    if (!std::isfinite(v)) throw Error(Errc::numeric_overflow, "trajectory diverged");
  }
  return Signal::from_flat(system.state_names(), std::move(data));
}

double objective_on(const SynthesisProblem& p, const Signal& trajectory, const InputSequence& u) {
  return robustness(p.semantics.engine, p.formula, trajectory, 0, p.semantics.beta) -
         p.lambda * input_cost(u);
}

void project(const DynamicalSystem& system, InputSequence& u) {
  for (std::size_t t = 0; t < u.steps(); ++t) {
    auto row = u.row(t);
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = std::clamp(row[i], system.input_lo()[i], system.input_hi()[i]);
    }
  }
}

InputSequence analytic_gradient(const SynthesisProblem& p, const InputSequence& u) {
  const DynamicalSystem& sys = *p.system;
  const std::size_t n = sys.state_dim();
  const std::size_t m = sys.input_dim();
  const std::size_t T = u.steps();
  const Signal trajectory = rollout(sys, p.q0, u);
  const auto rg = robustness_gradient(p.formula, trajectory, 0, p.semantics.beta);

  InputSequence out(T, m);
  std::vector<double> costate(rg.d_signal.begin() + static_cast<std::ptrdiff_t>(T * n),
                              rg.d_signal.end());
  std::vector<double> next(n);
  std::vector<double> jq(n * n);
  std::vector<double> ju(n * m);
  for (std::size_t t = T; t-- > 0;) {
    sys.jacobians(trajectory.sample(t), u.row(t), jq, ju);
    auto du = out.row(t);
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += ju[i * m + j] * costate[i];
      du[j] = acc - p.lambda * u.row(t)[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      double acc = rg.d_signal[t * n + j];
      for (std::size_t i = 0; i < n; ++i) acc += jq[i * n + j] * costate[i];
      next[j] = acc;
    }
    costate.swap(next);
  }
  return out;
}

InputSequence fd_gradient(const SynthesisProblem& p, const InputSequence& u, double h) {
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "finite-difference step must be > 0");
  InputSequence out(u.steps(), u.width());
  InputSequence probe = u;
  for (std::size_t k = 0; k < u.flat().size(); ++k) {
    const double saved = probe.flat()[k];
    probe.flat()[k] = saved + h;
    const double up = objective_on(p, rollout(*p.system, p.q0, probe), probe);
    probe.flat()[k] = saved - h;
    const double down = objective_on(p, rollout(*p.system, p.q0, probe), probe);
    probe.flat()[k] = saved;
    out.flat()[k] = (up - down) / (2.0 * h);
  }
  return out;
}

std::uint64_t start_seed(std::uint64_t seed, std::size_t start) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

struct StartOutcome {
  InputSequence inputs;
  double objective = -std::numeric_limits<double>::infinity();
  double exact = 0.0;
  bool satisfied = false;
  std::size_t iterations = 0;
};

double exact_robustness(const SynthesisProblem& p, const InputSequence& u) {
  return rob_traditional(strip_weights(p.formula), rollout(*p.system, p.q0, u), 0);
}

// Projected ascent on the constrained problem. While the exact robustness is
// at or below epsilon the start ascends robustness alone; once feasible it
// ascends the full objective and rejects steps that leave the feasible set.
StartOutcome ascend(const SynthesisProblem& p, const SynthesisOptions& opt, std::size_t start,
                    InputSequence u) {
  const DynamicalSystem& sys = *p.system;
  const GradientMode mode = p.semantics.engine == Engine::weighted_smooth
                                ? GradientMode::analytic
                                : GradientMode::central_difference;
  SynthesisProblem reach = p;
  reach.lambda = 0.0;

  double width = 0.0;
  for (std::size_t i = 0; i < sys.input_dim(); ++i) width += sys.input_hi()[i] - sys.input_lo()[i];
  width /= static_cast<double>(sys.input_dim());
  const double step0 = opt.initial_step * std::max(width, 1e-12);
  const double step_cap = std::max(width, 1e-12) * 10.0;
  double step = step0;

  StartOutcome out;
  bool feasible = exact_robustness(p, u) > p.semantics.epsilon;
  const SynthesisProblem* merit = feasible ? &p : &reach;
  double f = objective(*merit, u);
  for (std::size_t it = 0; it < opt.max_iters && std::isfinite(f); ++it) {
    const InputSequence g = gradient(*merit, u, mode);
    InputSequence probe = u;
    for (std::size_t k = 0; k < probe.flat().size(); ++k) probe.flat()[k] += g.flat()[k];
    project(sys, probe);
    double pg = 0.0;
    for (std::size_t k = 0; k < probe.flat().size(); ++k) {
      const double d = probe.flat()[k] - u.flat()[k];
      pg += d * d;
    }
    if (std::sqrt(pg) < opt.gradient_tol) break;

    bool accepted = false;
    while (step > 1e-12) {
      InputSequence candidate = u;
      for (std::size_t k = 0; k < candidate.flat().size(); ++k) {
        candidate.flat()[k] += step * g.flat()[k];
      }
      project(sys, candidate);
      double gain = 0.0;
      for (std::size_t k = 0; k < candidate.flat().size(); ++k) {
        gain += g.flat()[k] * (candidate.flat()[k] - u.flat()[k]);
      }
      const double f_new = objective(*merit, candidate);
      if (std::isfinite(f_new) && f_new >= f + opt.armijo * gain) {
        const bool candidate_feasible = exact_robustness(p, candidate) > p.semantics.epsilon;
        if (feasible && !candidate_feasible) {
          step *= 0.5;
          continue;
        }
        u = std::move(candidate);
        accepted = true;
        if (!feasible && candidate_feasible) {
          feasible = true;
          merit = &p;
          f = objective(p, u);
          step = step0;
        } else {
          f = f_new;
          step = std::min(step * 2.0, step_cap);
        }
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    ++out.iterations;
    if (opt.on_iterate) opt.on_iterate(start, u, f, feasible);
  }
  out.objective = objective(p, u);
  out.exact = exact_robustness(p, u);
  out.satisfied = out.exact > p.semantics.epsilon;
  out.inputs = std::move(u);
  return out;
}

}  // namespace

void SynthesisProblem::validate() const {
  if (!system) throw Error(Errc::invalid_argument, "synthesis problem has no system");
  if (q0.size() != system->state_dim()) {
    throw Error(Errc::length_mismatch, "q0 has " + std::to_string(q0.size()) + " entries, system has " +
                                           std::to_string(system->state_dim()) + " states");
  }
  for (double v : q0) {
    if (!std::isfinite(v)) throw Error(Errc::invalid_argument, "q0 must be finite");
  }
  if (horizon == 0) throw Error(Errc::invalid_argument, "T must be >= 1");
  const TimeStep h = wstl::horizon(formula);
  if (static_cast<TimeStep>(horizon) < h) {
    throw Error(Errc::horizon_exceeds_signal,
                "formula horizon " + std::to_string(h) + " exceeds T = " + std::to_string(horizon));
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(Errc::invalid_argument, "lambda must be finite and >= 0");
  }
  semantics.validate();
}

Signal simulate(const DynamicalSystem& system, std::span<const double> q0,
                const InputSequence& inputs) {
  check_shape(system, q0, inputs);
  for (std::size_t t = 0; t < inputs.steps(); ++t) {
    if (!system.admissible(inputs.row(t))) {
      throw Error(Errc::input_out_of_bounds, "input at t=" + std::to_string(t) + " is outside U");
    }
  }
  return rollout(system, q0, inputs);
}

double input_cost(const InputSequence& inputs) {
  double acc = 0.0;
  for (double v : inputs.flat()) acc += v * v;
  return 0.5 * acc;
}

double objective(const SynthesisProblem& problem, const InputSequence& inputs) {
  check_shape(*problem.system, problem.q0, inputs);
  return objective_on(problem, rollout(*problem.system, problem.q0, inputs), inputs);
}

InputSequence gradient(const SynthesisProblem& problem, const InputSequence& inputs,
                       GradientMode mode, double h) {
  check_shape(*problem.system, problem.q0, inputs);
  if (mode == GradientMode::central_difference) return fd_gradient(problem, inputs, h);
  if (problem.semantics.engine != Engine::weighted_smooth) {
    throw Error(Errc::non_smooth_engine,
                std::string("analytic gradient needs the smooth engine, got ") +
                    to_string(problem.semantics.engine));
  }
  return analytic_gradient(problem, inputs);
}

InputSequence random_inputs(const DynamicalSystem& system, std::size_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InputSequence u(steps, system.input_dim());
  for (std::size_t t = 0; t < steps; ++t) {
    auto row = u.row(t);
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::uniform_real_distribution<double> dist(system.input_lo()[i], system.input_hi()[i]);
      row[i] = dist(rng);
    }
  }
  return u;
}

namespace {

SynthesisResult finish(const SynthesisProblem& problem, std::vector<StartOutcome> outcomes,
                       std::chrono::steady_clock::time_point started) {
  std::size_t total = 0;
  for (const auto& o : outcomes) total += o.iterations;
  const bool any_satisfied =
      std::any_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.satisfied; });
  std::size_t best = outcomes.size();
  for (std::size_t s = 0; s < outcomes.size(); ++s) {
    if (any_satisfied && !outcomes[s].satisfied) continue;
    if (best == outcomes.size() || outcomes[s].objective > outcomes[best].objective) best = s;
  }

  SynthesisResult r;
  r.inputs = outcomes[best].inputs;
  r.trajectory = simulate(*problem.system, problem.q0, r.inputs);
  r.objective = outcomes[best].objective;
  r.robustness_smooth = robustness(problem.semantics.engine, problem.formula, r.trajectory, 0,
                                   problem.semantics.beta);
  r.robustness_exact = outcomes[best].exact;
  r.satisfied = verdict_of(r.robustness_exact, problem.semantics.epsilon);
  r.iterations = outcomes[best].iterations;
  r.total_iterations = total;
  r.best_start = best;
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

}  // namespace

SynthesisResult synthesize_from(const SynthesisProblem& problem, const InputSequence& initial,
                                const SynthesisOptions& options) {
  problem.validate();
  if (initial.steps() != problem.horizon) {
    throw Error(Errc::length_mismatch, "initial guess has " + std::to_string(initial.steps()) +
                                           " steps, T = " + std::to_string(problem.horizon));
  }
  check_shape(*problem.system, problem.q0, initial);
  const auto started = std::chrono::steady_clock::now();
  InputSequence u = initial;
  project(*problem.system, u);
  std::vector<StartOutcome> outcomes;
  outcomes.push_back(ascend(problem, options, 0, std::move(u)));
  return finish(problem, std::move(outcomes), started);
}

SynthesisResult synthesize(const SynthesisProblem& problem, const SynthesisOptions& options) {
  problem.validate();
  if (options.restarts == 0) throw Error(Errc::invalid_argument, "restarts must be >= 1");
  const auto started = std::chrono::steady_clock::now();

  std::vector<StartOutcome> outcomes;
  for (std::size_t s = 0; s < options.restarts; ++s) {
    InputSequence u0;
    if (s == 0 && options.center_start) {
      u0 = InputSequence(problem.horizon, problem.system->input_dim());
      for (std::size_t t = 0; t < problem.horizon; ++t) {
        for (std::size_t i = 0; i < u0.width(); ++i) {
          u0.row(t)[i] = 0.5 * (problem.system->input_lo()[i] + problem.system->input_hi()[i]);
        }
      }
    } else {
      u0 = random_inputs(*problem.system, problem.horizon, start_seed(options.seed, s));
    }
    outcomes.push_back(ascend(problem, options, s, std::move(u0)));
  }

  return finish(problem, std::move(outcomes), started);
}

}  // namespace wstl
