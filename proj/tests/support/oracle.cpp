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


#include "oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wstl::testing {
namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

std::vector<long double> normalized(std::vector<long double> w) {
  long double total = 0;
  for (auto v : w) total += v;
  for (auto& v : w) v /= total;
  return w;
}

// Conjunction-style aggregation; `x` are operand values.
long double conj(Engine e, const std::vector<long double>& p, const std::vector<long double>& x,
                 long double beta) {
  if (x.size() == 1) return x[0];
  long double out = kInf;
  switch (e) {
    case Engine::traditional:
      for (auto v : x) out = std::min(out, v);
      return out;
    case Engine::weighted_traditional:
      // Satisfied operands shrink by 1 - p, violated ones by p.
      for (std::size_t i = 0; i < x.size(); ++i) {
        long double v = x[i] > 0 ? (1 - p[i]) * x[i] : (x[i] < 0 ? p[i] * x[i] : 0.0L);
        out = std::min(out, v);
      }
      return out;
    case Engine::weighted_agm: {
      bool all_pos = true;
      for (auto v : x) all_pos = all_pos && v > 0;
      if (all_pos) {
        long double prod = 1;
        for (std::size_t i = 0; i < x.size(); ++i) prod *= std::pow(x[i], p[i]);
        return prod;
      }
      long double sum = 0;
      for (std::size_t i = 0; i < x.size(); ++i) sum += p[i] * std::min(x[i], 0.0L);
      return sum;
    }
    case Engine::weighted_smooth: {
      std::vector<long double> z;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == -kInf) return -kInf;
        if (x[i] == kInf) continue;
        z.push_back(((0.5L - p[i]) * std::tanh(beta * x[i]) + 0.5L) * x[i]);
      }
      if (z.empty()) return kInf;
      return oracle_softmin(z, beta);
    }
  }
  throw std::logic_error("engine");
}

long double disj(Engine e, const std::vector<long double>& p, const std::vector<long double>& x,
                 long double beta) {
  if (x.size() == 1) return x[0];
  long double out = -kInf;
  switch (e) {
    case Engine::traditional:
      for (auto v : x) out = std::max(out, v);
      return out;
    case Engine::weighted_traditional:
      for (std::size_t i = 0; i < x.size(); ++i) {
        long double v = x[i] > 0 ? p[i] * x[i] : (x[i] < 0 ? (1 - p[i]) * x[i] : 0.0L);
        out = std::max(out, v);
      }
      return out;
    case Engine::weighted_agm: {
      bool all_neg = true;
      for (auto v : x) all_neg = all_neg && v < 0;
      if (all_neg) {
        long double prod = 1;
        for (std::size_t i = 0; i < x.size(); ++i) prod *= std::pow(-x[i], p[i]);
        return -prod;
      }
      long double sum = 0;
      for (std::size_t i = 0; i < x.size(); ++i) sum += p[i] * std::max(x[i], 0.0L);
      return sum;
    }
    case Engine::weighted_smooth: {
      std::vector<long double> z;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == kInf) return kInf;
        if (x[i] == -kInf) continue;
        z.push_back(((p[i] - 0.5L) * std::tanh(beta * x[i]) + 0.5L) * x[i]);
      }
      if (z.empty()) return -kInf;
      return oracle_softmax(z, beta);
    }
  }
  throw std::logic_error("engine");
}

}  // namespace

std::vector<long double> oracle_weights(const WeightFn& w, long long first, std::size_t count) {
  std::vector<long double> out;
  for (std::size_t i = 0; i < count; ++i) {
    const long double k = static_cast<long double>(first + static_cast<long long>(i));
    switch (w.kind()) {
      case WeightFn::Kind::constant: out.push_back(w.scalar()); break;
      case WeightFn::Kind::discount: out.push_back(std::pow(static_cast<long double>(w.scalar()), k - 1)); break;
      case WeightFn::Kind::explicit_vector: out.push_back(w.values().at(i)); break;
      case WeightFn::Kind::gaussian: {
        long double v = w.scalar();
        for (std::size_t j = 0; j < w.centers().size(); ++j) {
          const long double z = (k - w.centers()[j]) / w.widths()[j];
          v += std::exp(-z * z);
        }
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

long double oracle_softmin(const std::vector<long double>& x, long double beta) {
  long double sum = 0;
  for (auto v : x) sum += std::exp(-beta * v);
  return -std::log(sum) / beta;
}

long double oracle_softmax(const std::vector<long double>& x, long double beta) {
  long double num = 0;
  long double den = 0;
  for (auto v : x) {
    num += v * std::exp(beta * v);
    den += std::exp(beta * v);
  }
  return num / den;
}

long double oracle_robustness(Engine e, const Formula& f, const Signal& s, TimeStep t,
                              long double beta) {
  const long double top = e == Engine::weighted_agm ? 1.0L : kInf;
  const auto& n = f.node();
  if (std::holds_alternative<True>(n)) return top;
  if (std::holds_alternative<False>(n)) return -top;
  if (const auto* p = std::get_if<Predicate>(&n)) {
    long double l = p->expr.offset;
    for (const auto& [name, c] : p->expr.coefficients) {
      l += static_cast<long double>(c) * s.at(static_cast<std::size_t>(t), *s.index_of(name));
    }
    if (p->mode.kind == PredicateMode::Kind::boolean) return l >= 0 ? p->mode.magnitude : -p->mode.magnitude;
    return l;
  }
  if (const auto* m = std::get_if<Not>(&n)) return -oracle_robustness(e, m->sub, s, t, beta);
  if (const auto* a = std::get_if<And>(&n)) {
    std::vector<long double> x;
    for (const auto& sub : a->subs) x.push_back(oracle_robustness(e, sub, s, t, beta));
    return conj(e, normalized(oracle_weights(a->weights, 1, x.size())), x, beta);
  }
  if (const auto* o = std::get_if<Or>(&n)) {
    std::vector<long double> x;
    for (const auto& sub : o->subs) x.push_back(oracle_robustness(e, sub, s, t, beta));
    return disj(e, normalized(oracle_weights(o->weights, 1, x.size())), x, beta);
  }
  if (const auto* g = std::get_if<Always>(&n)) {
    std::vector<long double> x;
    for (TimeStep k = g->interval.lo(); k <= g->interval.hi(); ++k) {
      x.push_back(oracle_robustness(e, g->sub, s, t + k, beta));
    }
    return conj(e, normalized(oracle_weights(g->weights, g->interval.lo(), x.size())), x, beta);
  }
  const auto& ev = std::get<Eventually>(n);
  std::vector<long double> x;
  for (TimeStep k = ev.interval.lo(); k <= ev.interval.hi(); ++k) {
    x.push_back(oracle_robustness(e, ev.sub, s, t + k, beta));
  }
  return disj(e, normalized(oracle_weights(ev.weights, ev.interval.lo(), x.size())), x, beta);
}

}  // namespace wstl::testing
