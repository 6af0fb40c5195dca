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
#include <span>
#include <vector>

#include "wstl/time.hpp"

namespace wstl {

/// Strictly positive weight function, either over the operands 1..N of a
/// conjunction/disjunction or over the points of a temporal interval.
///
/// The parametric families are evaluated at an integer coordinate k:
/// operand index (1-based) or the interval point itself.
///   constant  w(k) = c
///   discount  w(k) = gamma^(k - 1)
///   explicit  w(k) = values[k - first]
///   gaussian  w(k) = floor + sum_j exp(-((k - center_j) / width_j)^2)
class WeightFn {
 public:
  enum class Kind { constant, discount, explicit_vector, gaussian };

  /// Unit weights, the unweighted marker.
  WeightFn() = default;

  static WeightFn constant(double c);
  static WeightFn discount(double gamma);
  static WeightFn vector(std::vector<double> values);
  static WeightFn gaussian(std::vector<double> centers, std::vector<double> widths, double floor);

  Kind kind() const noexcept { return kind_; }

  /// c for constant, gamma for discount, floor for gaussian.
  double scalar() const noexcept { return scalar_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<double>& centers() const noexcept { return values_; }
  const std::vector<double>& widths() const noexcept { return widths_; }

  /// True for constant 1, the canonical unweighted marker.
  bool is_unit() const noexcept { return kind_ == Kind::constant && scalar_ == 1.0; }

  /// Weights of N operands, coordinates 1..N. Not normalized.
  std::vector<double> realize(std::size_t operands) const;
  /// Weights at the points of an interval, coordinates lo..hi. Not normalized.
  std::vector<double> realize(const TimeInterval& interval) const;

  friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
  std::vector<double> realize_on(long long first, std::size_t count) const;

  Kind kind_ = Kind::constant;
  double scalar_ = 1.0;
  std::vector<double> values_;
  std::vector<double> widths_;
};

/// p_i / sum_j p_j. Throws Error(non_positive_weight) on any entry <= 0.
std::vector<double> normalize(std::span<const double> weights);

}  // namespace wstl
