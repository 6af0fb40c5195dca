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

#include "wstl/weights.hpp"

#include <cmath>
#include <string>

#include "numfmt.hpp"
#include "wstl/error.hpp"

namespace wstl {
namespace {

void require_positive(double w, const char* what) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw Error(Errc::non_positive_weight,
                std::string(what) + " must be finite and > 0, got " + detail::shortest(w));
  }
}

}  // namespace

WeightFn WeightFn::constant(double c) {
  require_positive(c, "constant weight");
  WeightFn w;
  w.scalar_ = c;
  return w;
}

WeightFn WeightFn::discount(double gamma) {
  require_positive(gamma, "discount factor");
  WeightFn w;
  w.kind_ = Kind::discount;
  w.scalar_ = gamma;
  return w;
}

WeightFn WeightFn::vector(std::vector<double> values) {
  if (values.empty()) throw Error(Errc::length_mismatch, "empty weight vector");
  for (double v : values) require_positive(v, "weight");
  WeightFn w;
  w.kind_ = Kind::explicit_vector;
  w.scalar_ = 0.0;
  w.values_ = std::move(values);
  return w;
}

WeightFn WeightFn::gaussian(std::vector<double> centers, std::vector<double> widths, double floor) {
  if (centers.empty() || centers.size() != widths.size()) {
    throw Error(Errc::length_mismatch, "gaussian weights need as many widths as centers (>= 1)");
  }
  for (double c : centers) {
    if (!std::isfinite(c)) throw Error(Errc::invalid_argument, "non-finite gaussian center");
  }
  for (double s : widths) require_positive(s, "gaussian width");
  if (!(floor >= 0.0) || !std::isfinite(floor)) {
    throw Error(Errc::non_positive_weight, "gaussian floor must be finite and >= 0");
  }
  WeightFn w;
  w.kind_ = Kind::gaussian;
  w.scalar_ = floor;
  w.values_ = std::move(centers);
  w.widths_ = std::move(widths);
  return w;
}

std::vector<double> WeightFn::realize_on(long long first, std::size_t count) const {
  if (count == 0) throw Error(Errc::invalid_argument, "weights over an empty domain");
  std::vector<double> out(count);
  switch (kind_) {
    case Kind::constant:
      out.assign(count, scalar_);
      break;
    case Kind::discount:
      for (std::size_t i = 0; i < count; ++i) {
        out[i] = std::pow(scalar_, static_cast<double>(first + static_cast<long long>(i) - 1));
      }
      break;
    case Kind::explicit_vector:
      if (values_.size() != count) {
        throw Error(Errc::length_mismatch, "weight vector has " + std::to_string(values_.size()) +
                                               " entries, domain has " + std::to_string(count));
      }
      out = values_;
      break;
    case Kind::gaussian:
      for (std::size_t i = 0; i < count; ++i) {
        const double k = static_cast<double>(first + static_cast<long long>(i));
        double w = scalar_;
        for (std::size_t j = 0; j < values_.size(); ++j) {
          const double z = (k - values_[j]) / widths_[j];
          w += std::exp(-z * z);
        }
        out[i] = w;
      }
      break;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!(out[i] > 0.0) || !std::isfinite(out[i])) {
      throw Error(Errc::non_positive_weight, "realized weight at coordinate " +
                                                 std::to_string(first + static_cast<long long>(i)) +
                                                 " is " + detail::shortest(out[i]));
    }
  }
  return out;
}

std::vector<double> WeightFn::realize(std::size_t operands) const {
  return realize_on(1, operands);
}

std::vector<double> WeightFn::realize(const TimeInterval& interval) const {
  return realize_on(interval.lo(), static_cast<std::size_t>(interval.size()));
}

std::vector<double> normalize(std::span<const double> weights) {
  if (weights.empty()) throw Error(Errc::invalid_argument, "cannot normalize an empty weight vector");
  double total = 0.0;
  for (double w : weights) {
    require_positive(w, "weight");
    total += w;
  }
  std::vector<double> out(weights.begin(), weights.end());
  for (double& w : out) w /= total;
  return out;
}

}  // namespace wstl
