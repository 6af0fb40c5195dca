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

#include "wstl/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wstl/error.hpp"
#include "wstl/parser.hpp"

namespace wstl {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// ---------------------------------------------------------------------------
// Smooth aggregation with derivatives. Infinite operands (TRUE/FALSE under the
// smooth engine) carry no gradient.

// d/dx of ((c * tanh(beta x)) + 1/2) * x.
double smooth_term(double c, double x, double beta) {
  if (std::isinf(x)) return x;
  return (c * std::tanh(beta * x) + 0.5) * x;
}
double smooth_term_derivative(double c, double x, double beta) {
  if (std::isinf(x)) return 0.0;
  const double th = std::tanh(beta * x);
  return c * (beta * (1.0 - th * th) * x + th) + 0.5;
}

double softmin_grad(std::span<const double> z, double beta, std::span<double> dz) {
  std::fill(dz.begin(), dz.end(), 0.0);
  double lo = kInf;
  for (double v : z) {
    if (v == -kInf) return -kInf;
    lo = std::min(lo, v);
  }
  if (lo == kInf) return kInf;
  double total = 0.0;
  for (double v : z) {
    if (v != kInf) total += std::exp(-beta * (v - lo));
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] != kInf) dz[i] = std::exp(-beta * (z[i] - lo)) / total;
  }
  return lo - std::log(total) / beta;
}

double softmax_grad(std::span<const double> z, double beta, std::span<double> dz) {
  std::fill(dz.begin(), dz.end(), 0.0);
  double hi = -kInf;
  for (double v : z) {
    if (v == kInf) return kInf;
    hi = std::max(hi, v);
  }
  if (hi == -kInf) return -kInf;
  double total = 0.0;
  double weighted = 0.0;
  for (double v : z) {
    if (v == -kInf) continue;
    const double e = std::exp(beta * (v - hi));
    total += e;
    weighted += v * e;
  }
  const double s = weighted / total;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == -kInf) continue;
    const double p = std::exp(beta * (z[i] - hi)) / total;
    dz[i] = p * (1.0 + beta * (z[i] - s));
  }
  return s;
}

// Smooth meet/join of weighted terms; fills d(result)/dx_i.
double smooth_aggregate(bool is_meet, std::span<const double> w, std::span<const double> x,
                        double beta, std::span<double> dx) {
  const std::size_t n = x.size();
  if (n == 1) {
    dx[0] = std::isinf(x[0]) ? 0.0 : 1.0;
    return x[0];
  }
  std::vector<double> z(n);
  std::vector<double> dz(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = is_meet ? 0.5 - w[i] : w[i] - 0.5;
    z[i] = smooth_term(c, x[i], beta);
  }
  const double y = is_meet ? softmin_grad(z, beta, dz) : softmax_grad(z, beta, dz);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = is_meet ? 0.5 - w[i] : w[i] - 0.5;
    dx[i] = dz[i] * smooth_term_derivative(c, x[i], beta);
  }
  return y;
}

double weighted_min(std::span<const double> w, std::span<const double> x) {
  double out = kInf;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out = std::min(out, ((0.5 - w[i]) * sign(x[i]) + 0.5) * x[i]);
  }
  return out;
}

double agm_meet(std::span<const double> w, std::span<const double> x) {
  const bool all_positive = std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; });
  double acc = 0.0;
  if (all_positive) {
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * std::log(x[i]);
    return std::exp(acc);
  }
  // Exact zeros without negatives fall through here and yield 0.
  for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * std::min(x[i], 0.0);
  return acc;
}

std::vector<double> negated(std::span<const double> x) {
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [](double v) { return -v; });
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation plan: the formula flattened in pre-order with predicates bound to
// signal columns and weights normalized.

struct PlanNode {
  enum class Op { truth, falsity, predicate, negation, meet, join };
  Op op = Op::truth;
  bool temporal = false;
  TimeStep lo = 0;
  TimeStep hi = 0;
  std::vector<std::size_t> kids;
  std::vector<double> weights;
  std::vector<std::pair<std::size_t, double>> terms;
  double offset = 0.0;
  PredicateMode mode;
  Formula source;
  std::string path;
};

class Plan {
 public:
  Plan(const Formula& f, const Signal& signal) { add(f, signal, "root"); }

  const std::vector<PlanNode>& nodes() const { return nodes_; }

 private:
  std::size_t add(const Formula& f, const Signal& signal, std::string path) {
    const std::size_t id = nodes_.size();
    nodes_.emplace_back();
    nodes_[id].source = f;
    nodes_[id].path = path;

    PlanNode node;
    std::vector<Formula> subs;
    std::visit(overloaded{
                   [&](const True&) { node.op = PlanNode::Op::truth; },
                   [&](const False&) { node.op = PlanNode::Op::falsity; },
                   [&](const Predicate& p) {
                     node.op = PlanNode::Op::predicate;
                     node.mode = p.mode;
                     node.offset = p.expr.offset;
                     for (const auto& [name, c] : p.expr.coefficients) {
                       auto idx = signal.index_of(name);
                       if (!idx) {
                         throw Error(Errc::invalid_argument,
                                     "signal has no component '" + name + "'");
                       }
                       node.terms.emplace_back(*idx, c);
                     }
                   },
                   [&](const Not& n) {
                     node.op = PlanNode::Op::negation;
                     subs = {n.sub};
                   },
                   [&](const And& n) {
                     node.op = PlanNode::Op::meet;
                     node.weights = normalize(n.weights.realize(n.subs.size()));
                     subs = n.subs;
                   },
                   [&](const Or& n) {
                     node.op = PlanNode::Op::join;
                     node.weights = normalize(n.weights.realize(n.subs.size()));
                     subs = n.subs;
                   },
                   [&](const Always& n) {
                     node.op = PlanNode::Op::meet;
                     node.temporal = true;
                     node.lo = n.interval.lo();
                     node.hi = n.interval.hi();
                     node.weights = normalize(n.weights.realize(n.interval));
                     subs = {n.sub};
                   },
                   [&](const Eventually& n) {
                     node.op = PlanNode::Op::join;
                     node.temporal = true;
                     node.lo = n.interval.lo();
                     node.hi = n.interval.hi();
                     node.weights = normalize(n.weights.realize(n.interval));
                     subs = {n.sub};
                   },
               },
               f.node());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      node.kids.push_back(add(subs[i], signal, path + "." + std::to_string(i)));
    }
    node.source = std::move(nodes_[id].source);
    node.path = std::move(nodes_[id].path);
    nodes_[id] = std::move(node);
    return id;
  }

  std::vector<PlanNode> nodes_;
};

void check_horizon(const Formula& f, const Signal& signal, TimeStep t) {
  const TimeStep h = horizon(f);
  const auto length = static_cast<TimeStep>(signal.length());
  if (t < 0 || t + h > length - 1) {
    throw Error(Errc::horizon_exceeds_signal,
                "evaluating at t=" + std::to_string(t) + " needs samples up to " +
                    std::to_string(t + h) + ", signal has " + std::to_string(length) +
                    " (last index " + std::to_string(length - 1) + ")");
  }
}

class Evaluator {
 public:
  Evaluator(const Formula& f, const Signal& signal, Engine engine, double beta)
      : plan_(f, signal),
        signal_(signal),
        engine_(engine),
        beta_(beta),
        length_(signal.length()),
        memo_(plan_.nodes().size() * length_, 0.0),
        done_(plan_.nodes().size() * length_, 0) {}

  double value(std::size_t id, TimeStep t) {
    const std::size_t slot = id * length_ + static_cast<std::size_t>(t);
    if (done_[slot]) return memo_[slot];
    const double v = compute(id, t);
    memo_[slot] = v;
    done_[slot] = 1;
    return v;
  }

  // Reverse accumulation of d value(0, t0) / d signal. Smooth engine only.
  std::vector<double> gradient(TimeStep t0) const {
    const auto& nodes = plan_.nodes();
    std::vector<double> adjoint(memo_.size(), 0.0);
    std::vector<double> d_signal(signal_.flat().size(), 0.0);
    adjoint[static_cast<std::size_t>(t0)] = 1.0;
    std::vector<double> x;
    std::vector<double> dx;
    // Pre-order numbering puts every parent before its children.
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      const PlanNode& n = nodes[id];
      for (std::size_t t = 0; t < length_; ++t) {
        const std::size_t slot = id * length_ + t;
        const double a = adjoint[slot];
        if (!done_[slot] || a == 0.0) continue;
        const auto ts = static_cast<TimeStep>(t);
        switch (n.op) {
          case PlanNode::Op::truth:
          case PlanNode::Op::falsity:
            break;
          case PlanNode::Op::predicate:
            if (n.mode.kind == PredicateMode::Kind::metric) {
              for (const auto& [col, c] : n.terms) d_signal[t * signal_.width() + col] += a * c;
            }
            break;
          case PlanNode::Op::negation:
            adjoint[n.kids[0] * length_ + t] -= a;
            break;
          case PlanNode::Op::meet:
          case PlanNode::Op::join: {
            gather(n, ts, x);
            dx.assign(x.size(), 0.0);
            smooth_aggregate(n.op == PlanNode::Op::meet, n.weights, x, beta_, dx);
            for (std::size_t i = 0; i < x.size(); ++i) {
              adjoint[operand_slot(n, ts, i)] += a * dx[i];
            }
            break;
          }
        }
      }
    }
    return d_signal;
  }

  void trace(std::map<std::string, NodeTrace>& out) const {
    const auto& nodes = plan_.nodes();
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      NodeTrace nt;
      nt.formula = to_string(nodes[id].source);
      for (std::size_t t = 0; t < length_; ++t) {
        if (done_[id * length_ + t]) nt.values[static_cast<TimeStep>(t)] = memo_[id * length_ + t];
      }
      out.emplace(nodes[id].path, std::move(nt));
    }
  }

 private:
  std::size_t operand_slot(const PlanNode& n, TimeStep t, std::size_t i) const {
    if (n.temporal) return n.kids[0] * length_ + static_cast<std::size_t>(t + n.lo) + i;
    return n.kids[i] * length_ + static_cast<std::size_t>(t);
  }

  // Operand values of an aggregation node; all already memoized.
  void gather(const PlanNode& n, TimeStep t, std::vector<double>& x) const {
    const std::size_t count = n.temporal ? static_cast<std::size_t>(n.hi - n.lo + 1) : n.kids.size();
    x.resize(count);
    for (std::size_t i = 0; i < count; ++i) x[i] = memo_[operand_slot(n, t, i)];
  }

  double compute(std::size_t id, TimeStep t) {
    const PlanNode& n = plan_.nodes()[id];
    const double top = engine_ == Engine::weighted_agm ? 1.0 : kInf;
    switch (n.op) {
      case PlanNode::Op::truth: return top;
      case PlanNode::Op::falsity: return -top;
      case PlanNode::Op::predicate: {
        const auto sample = signal_.sample(static_cast<std::size_t>(t));
        double l = n.offset;
        for (const auto& [col, c] : n.terms) l += c * sample[col];
        if (n.mode.kind == PredicateMode::Kind::boolean) {
          return l >= 0.0 ? n.mode.magnitude : -n.mode.magnitude;
        }
        return l;
      }
      case PlanNode::Op::negation: return -value(n.kids[0], t);
      case PlanNode::Op::meet:
      case PlanNode::Op::join: {
        if (n.temporal) {
          for (TimeStep s = t + n.lo; s <= t + n.hi; ++s) value(n.kids[0], s);
        } else {
          for (std::size_t k : n.kids) value(k, t);
        }
        std::vector<double> x;
        gather(n, t, x);
        return n.op == PlanNode::Op::meet ? aggregate::meet(engine_, n.weights, x, beta_)
                                          : aggregate::join(engine_, n.weights, x, beta_);
      }
    }
    return 0.0;
  }

  Plan plan_;
  const Signal& signal_;
  Engine engine_;
  double beta_;
  std::size_t length_;
  std::vector<double> memo_;
  std::vector<char> done_;
};

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(Errc::invalid_argument, "beta must be finite and > 0");
  }
}

}  // namespace

const char* to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::traditional: return "traditional";
    case Engine::weighted_traditional: return "weighted-traditional";
    case Engine::weighted_agm: return "agm";
    case Engine::weighted_smooth: return "smooth";
  }
  return "unknown";
}

Engine engine_from_string(std::string_view name) {
  if (name == "traditional" || name == "trad") return Engine::traditional;
  if (name == "weighted-traditional" || name == "weighted_traditional" || name == "wtrad") {
    return Engine::weighted_traditional;
  }
  if (name == "agm" || name == "weighted-agm" || name == "weighted_agm") return Engine::weighted_agm;
  if (name == "smooth" || name == "weighted-smooth" || name == "weighted_smooth") {
    return Engine::weighted_smooth;
  }
  throw Error(Errc::invalid_argument,
              "unknown engine '" + std::string(name) +
                  "' (expected traditional, weighted-traditional, agm or smooth)");
}

const char* to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::yes: return "Yes";
    case Verdict::no: return "No";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Verdict verdict_of(double value, double epsilon) noexcept {
  if (value > epsilon) return Verdict::yes;
  if (value < -epsilon) return Verdict::no;
  return Verdict::inconclusive;
}

void SemanticsConfig::validate() const {
  check_beta(beta);
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw Error(Errc::invalid_argument, "epsilon must be finite and >= 0");
  }
}

double default_smooth_epsilon(const Formula& f, double beta) {
  check_beta(beta);
  return std::log(static_cast<double>(max_arity(f))) / beta;
}

namespace aggregate {

double softmin(std::span<const double> x, double beta) {
  std::vector<double> dz(x.size());
  return softmin_grad(x, beta, dz);
}

double softmax(std::span<const double> x, double beta) {
  std::vector<double> dz(x.size());
  return softmax_grad(x, beta, dz);
}

double meet(Engine engine, std::span<const double> weights, std::span<const double> x,
            double beta) {
  if (x.empty()) throw Error(Errc::invalid_argument, "aggregation over no operands");
  // A lone operand (a G/F over [a,a]) passes through unchanged in every engine.
  if (x.size() == 1) return x[0];
  switch (engine) {
    case Engine::traditional: return *std::min_element(x.begin(), x.end());
    case Engine::weighted_traditional: return weighted_min(weights, x);
    case Engine::weighted_agm: return agm_meet(weights, x);
    case Engine::weighted_smooth: {
      std::vector<double> dx(x.size());
      return smooth_aggregate(true, weights, x, beta, dx);
    }
  }
  return 0.0;
}

double join(Engine engine, std::span<const double> weights, std::span<const double> x,
            double beta) {
  if (x.empty()) throw Error(Errc::invalid_argument, "aggregation over no operands");
  if (x.size() == 1) return x[0];
  switch (engine) {
    case Engine::traditional: return *std::max_element(x.begin(), x.end());
    case Engine::weighted_traditional:
    case Engine::weighted_agm: {
      // De Morgan dual of the meet.
      const auto neg = negated(x);
      return -meet(engine, weights, neg, beta);
    }
    case Engine::weighted_smooth: {
      std::vector<double> dx(x.size());
      return smooth_aggregate(false, weights, x, beta, dx);
    }
  }
  return 0.0;
}

}  // namespace aggregate

double robustness(Engine engine, const Formula& f, const Signal& signal, TimeStep t, double beta) {
  if (engine == Engine::weighted_smooth) check_beta(beta);
  check_horizon(f, signal, t);
  Evaluator ev(f, signal, engine, beta);
  return ev.value(0, t);
}

double rob_traditional(const Formula& f, const Signal& signal, TimeStep t) {
  return robustness(Engine::traditional, f, signal, t);
}

double rob_weighted_traditional(const Formula& f, const Signal& signal, TimeStep t) {
  return robustness(Engine::weighted_traditional, f, signal, t);
}

double rob_weighted_agm(const Formula& f, const Signal& signal, TimeStep t) {
  return robustness(Engine::weighted_agm, f, signal, t);
}

double rob_weighted_smooth(const Formula& f, const Signal& signal, TimeStep t, double beta) {
  return robustness(Engine::weighted_smooth, f, signal, t, beta);
}

RobustnessGradient robustness_gradient(const Formula& f, const Signal& signal, TimeStep t,
                                       double beta) {
  check_beta(beta);
  check_horizon(f, signal, t);
  Evaluator ev(f, signal, Engine::weighted_smooth, beta);
  RobustnessGradient out;
  out.value = ev.value(0, t);
  if (!std::isfinite(out.value)) {
    throw Error(Errc::numeric_overflow, "smooth robustness is not finite; no gradient");
  }
  out.d_signal = ev.gradient(t);
  return out;
}

RobustnessReport evaluate(const Formula& f, const Signal& signal, TimeStep t,
                          const SemanticsConfig& config, bool with_trace) {
  config.validate();
  check_horizon(f, signal, t);
  Evaluator ev(f, signal, config.engine, config.beta);
  RobustnessReport report;
  report.value = ev.value(0, t);
  report.verdict = verdict_of(report.value, config.epsilon);
  if (with_trace) {
    report.trace.emplace();
    ev.trace(*report.trace);
  }
  return report;
}

Verdict satisfies(const Formula& f, const Signal& signal, TimeStep t, const SemanticsConfig& config) {
  config.validate();
  return verdict_of(rob_traditional(strip_weights(f), signal, t), config.epsilon);
}

std::vector<RankedSignal> rank_signals(const Formula& f, std::span<const Signal> signals,
                                       const SemanticsConfig& config, TimeStep t) {
  config.validate();
  std::vector<RankedSignal> ranked;
  ranked.reserve(signals.size());
  for (std::size_t i = 0; i < signals.size(); ++i) {
    ranked.push_back({i, robustness(config.engine, f, signals[i], t, config.beta)});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedSignal& a, const RankedSignal& b) { return a.value > b.value; });
  return ranked;
}

}  // namespace wstl
