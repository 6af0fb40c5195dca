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
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wstl/time.hpp"
#include "wstl/weights.hpp"

namespace wstl {

/// l(s) = sum_k coefficient_k * s[k] + offset; the predicate reads l(s) >= 0.
struct AffineExpr {
  std::map<std::string, double> coefficients;
  double offset = 0.0;

  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

/// Metric predicates are worth l(s); Boolean ones +c when l(s) >= 0, else -c.
struct PredicateMode {
  enum class Kind { metric, boolean };
  Kind kind = Kind::metric;
  double magnitude = 1.0;

  static PredicateMode metric() { return {}; }
  static PredicateMode boolean(double c = 1.0);

  friend bool operator==(const PredicateMode&, const PredicateMode&) = default;
};

struct FormulaNode;

/// Immutable weighted temporal logic formula. Copies share structure.
class Formula {
 public:
  /// The constant TRUE.
  Formula();

  static Formula truth();
  static Formula falsity();
  /// Throws Error(invalid_argument) if every coefficient is zero.
  static Formula predicate(AffineExpr expr, PredicateMode mode = PredicateMode::metric());
  static Formula negation(Formula sub);
  /// N >= 2 operands; explicit weight vectors must have N entries.
  static Formula conjunction(std::vector<Formula> subs, WeightFn weights = {});
  static Formula disjunction(std::vector<Formula> subs, WeightFn weights = {});
  static Formula always(TimeInterval interval, Formula sub, WeightFn weights = {});
  static Formula eventually(TimeInterval interval, Formula sub, WeightFn weights = {});

  /// The variant of True, False, Predicate, Not, And, Or, Always, Eventually.
  const auto& node() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const FormulaNode> node_;
};

struct True {
  friend bool operator==(const True&, const True&) = default;
};
struct False {
  friend bool operator==(const False&, const False&) = default;
};
struct Predicate {
  AffineExpr expr;
  PredicateMode mode;
  friend bool operator==(const Predicate&, const Predicate&) = default;
};
struct Not {
  Formula sub;
  friend bool operator==(const Not&, const Not&) = default;
};
struct And {
  std::vector<Formula> subs;
  WeightFn weights;
  friend bool operator==(const And&, const And&) = default;
};
struct Or {
  std::vector<Formula> subs;
  WeightFn weights;
  friend bool operator==(const Or&, const Or&) = default;
};
struct Always {
  TimeInterval interval;
  WeightFn weights;
  Formula sub;
  friend bool operator==(const Always&, const Always&) = default;
};
struct Eventually {
  TimeInterval interval;
  WeightFn weights;
  Formula sub;
  friend bool operator==(const Eventually&, const Eventually&) = default;
};

using FormulaVariant = std::variant<True, False, Predicate, Not, And, Or, Always, Eventually>;

struct FormulaNode {
  FormulaVariant value;
};

inline const auto& Formula::node() const noexcept { return node_->value; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Operands of a node in evaluation order (empty for leaves).
std::vector<Formula> children(const Formula& f);

/// Largest sample index touched when evaluating at t = 0.
TimeStep horizon(const Formula& f);

/// Same structure with every weight function replaced by unit weights.
Formula strip_weights(const Formula& f);

/// Largest number of values combined by a single aggregation: the arity of an
/// And/Or or the interval size of a G/F. 1 when the formula has neither.
std::size_t max_arity(const Formula& f);

/// Nesting depth counting only And/Or/G/F nodes.
std::size_t aggregation_depth(const Formula& f);

/// Number of nodes in the tree.
std::size_t size(const Formula& f);

/// Axis-aligned box membership as a conjunction of 2 * dim half-plane
/// predicates: (c_k - lo_k >= 0) and (hi_k - c_k >= 0) for each component.
/// Throws Error(degenerate_box) unless lo_k < hi_k for every k.
Formula box_region(const std::string& name, std::span<const double> lo, std::span<const double> hi,
                   std::span<const std::string> components,
                   PredicateMode mode = PredicateMode::metric());

}  // namespace wstl
