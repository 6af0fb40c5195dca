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

#include "wstl/formula.hpp"

#include <algorithm>
#include <cmath>

#include "numfmt.hpp"
#include "wstl/error.hpp"

namespace wstl {
namespace {

void check_operand_weights(const WeightFn& weights, std::size_t n) {
  // Realizing validates explicit lengths and positivity up front.
  (void)weights.realize(n);
}

std::vector<Formula> checked_operands(std::vector<Formula> subs, const char* op) {
  if (subs.size() < 2) {
    throw Error(Errc::invalid_argument, std::string(op) + " needs at least two operands");
  }
  return subs;
}

}  // namespace

PredicateMode PredicateMode::boolean(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(Errc::invalid_argument, "Boolean predicate magnitude must be > 0");
  }
  return {Kind::boolean, c};
}

Formula::Formula() : node_(std::make_shared<const FormulaNode>(FormulaNode{True{}})) {}

Formula Formula::truth() { return Formula{}; }

Formula Formula::falsity() { return Formula(std::make_shared<const FormulaNode>(FormulaNode{False{}})); }

Formula Formula::predicate(AffineExpr expr, PredicateMode mode) {
  std::erase_if(expr.coefficients, [](const auto& kv) { return kv.second == 0.0; });
  if (expr.coefficients.empty()) {
    throw Error(Errc::invalid_argument, "predicate needs at least one nonzero coefficient");
  }
  for (const auto& [name, c] : expr.coefficients) {
    if (name.empty() || !std::isfinite(c)) {
      throw Error(Errc::invalid_argument, "malformed predicate term");
    }
  }
  if (!std::isfinite(expr.offset)) throw Error(Errc::invalid_argument, "non-finite predicate offset");
  if (mode.kind == PredicateMode::Kind::boolean) mode = PredicateMode::boolean(mode.magnitude);
  return Formula(std::make_shared<const FormulaNode>(FormulaNode{Predicate{std::move(expr), mode}}));
}

Formula Formula::negation(Formula sub) {
  return Formula(std::make_shared<const FormulaNode>(FormulaNode{Not{std::move(sub)}}));
}

Formula Formula::conjunction(std::vector<Formula> subs, WeightFn weights) {
  subs = checked_operands(std::move(subs), "conjunction");
  check_operand_weights(weights, subs.size());
  return Formula(
      std::make_shared<const FormulaNode>(FormulaNode{And{std::move(subs), std::move(weights)}}));
}

Formula Formula::disjunction(std::vector<Formula> subs, WeightFn weights) {
  subs = checked_operands(std::move(subs), "disjunction");
  check_operand_weights(weights, subs.size());
  return Formula(
      std::make_shared<const FormulaNode>(FormulaNode{Or{std::move(subs), std::move(weights)}}));
}

Formula Formula::always(TimeInterval interval, Formula sub, WeightFn weights) {
  (void)weights.realize(interval);
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Always{interval, std::move(weights), std::move(sub)}}));
}

Formula Formula::eventually(TimeInterval interval, Formula sub, WeightFn weights) {
  (void)weights.realize(interval);
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Eventually{interval, std::move(weights), std::move(sub)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

std::vector<Formula> children(const Formula& f) {
  return std::visit(overloaded{
                        [](const Not& n) { return std::vector<Formula>{n.sub}; },
                        [](const And& n) { return n.subs; },
                        [](const Or& n) { return n.subs; },
                        [](const Always& n) { return std::vector<Formula>{n.sub}; },
                        [](const Eventually& n) { return std::vector<Formula>{n.sub}; },
                        [](const auto&) { return std::vector<Formula>{}; },
                    },
                    f.node());
}

TimeStep horizon(const Formula& f) {
  return std::visit(overloaded{
                        [](const Not& n) { return horizon(n.sub); },
                        [](const And& n) {
                          TimeStep h = 0;
                          for (const auto& s : n.subs) h = std::max(h, horizon(s));
                          return h;
                        },
                        [](const Or& n) {
                          TimeStep h = 0;
                          for (const auto& s : n.subs) h = std::max(h, horizon(s));
                          return h;
                        },
                        [](const Always& n) { return n.interval.hi() + horizon(n.sub); },
                        [](const Eventually& n) { return n.interval.hi() + horizon(n.sub); },
                        [](const auto&) { return TimeStep{0}; },
                    },
                    f.node());
}

Formula strip_weights(const Formula& f) {
  auto strip_all = [](const std::vector<Formula>& subs) {
    std::vector<Formula> out;
    out.reserve(subs.size());
    for (const auto& s : subs) out.push_back(strip_weights(s));
    return out;
  };
  return std::visit(
      overloaded{
          [&](const Not& n) { return Formula::negation(strip_weights(n.sub)); },
          [&](const And& n) { return Formula::conjunction(strip_all(n.subs)); },
          [&](const Or& n) { return Formula::disjunction(strip_all(n.subs)); },
          [&](const Always& n) { return Formula::always(n.interval, strip_weights(n.sub)); },
          [&](const Eventually& n) { return Formula::eventually(n.interval, strip_weights(n.sub)); },
          [&](const auto&) { return f; },
      },
      f.node());
}

std::size_t max_arity(const Formula& f) {
  std::size_t own = std::visit(overloaded{
                                   [](const And& n) { return n.subs.size(); },
                                   [](const Or& n) { return n.subs.size(); },
                                   [](const Always& n) { return static_cast<std::size_t>(n.interval.size()); },
                                   [](const Eventually& n) { return static_cast<std::size_t>(n.interval.size()); },
                                   [](const auto&) { return std::size_t{1}; },
                               },
                               f.node());
  for (const auto& c : children(f)) own = std::max(own, max_arity(c));
  return own;
}

std::size_t aggregation_depth(const Formula& f) {
  const bool aggregates = !std::holds_alternative<True>(f.node()) &&
                          !std::holds_alternative<False>(f.node()) &&
                          !std::holds_alternative<Predicate>(f.node()) &&
                          !std::holds_alternative<Not>(f.node());
  std::size_t deepest = 0;
  for (const auto& c : children(f)) deepest = std::max(deepest, aggregation_depth(c));
  return deepest + (aggregates ? 1 : 0);
}

std::size_t size(const Formula& f) {
  std::size_t n = 1;
  for (const auto& c : children(f)) n += size(c);
  return n;
}

Formula box_region(const std::string& name, std::span<const double> lo, std::span<const double> hi,
                   std::span<const std::string> components, PredicateMode mode) {
  if (lo.size() != hi.size() || lo.size() != components.size() || lo.empty()) {
    throw Error(Errc::invalid_argument, "box '" + name + "': bounds and components differ in length");
  }
  std::vector<Formula> faces;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (!(lo[k] < hi[k])) {
      throw Error(Errc::degenerate_box, "box '" + name + "': need lo < hi on '" + components[k] +
                                            "', got [" + detail::shortest(lo[k]) + ", " +
                                            detail::shortest(hi[k]) + "]");
    }
    faces.push_back(Formula::predicate({{{components[k], 1.0}}, -lo[k]}, mode));
    faces.push_back(Formula::predicate({{{components[k], -1.0}}, hi[k]}, mode));
  }
  return Formula::conjunction(std::move(faces));
}

}  // namespace wstl
