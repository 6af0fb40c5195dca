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


#include "wstl/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "wstl/error.hpp"

namespace wstl {
namespace {

void check_input_box(const std::vector<double>& lo, const std::vector<double>& hi, std::size_t m) {
  if (lo.size() != m || hi.size() != m) {
    throw Error(Errc::length_mismatch,
                "input bounds need " + std::to_string(m) + " entries each");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || !(lo[i] <= hi[i])) {
      throw Error(Errc::invalid_argument, "input bound " + std::to_string(i) + " is not a finite lo <= hi");
    }
  }
}

void check_names(const std::vector<std::string>& names, const char* what) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::any_of(sorted.begin(), sorted.end(), [](const auto& n) { return n.empty(); })) {
    throw Error(Errc::invalid_argument, std::string("empty ") + what + " name");
  }
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(Errc::invalid_argument, std::string("duplicate ") + what + " name '" + *dup + "'");
  }
}

std::vector<std::string> prefixed(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back("u_" + n);
  return out;
}

}  // namespace

DynamicalSystem::DynamicalSystem(std::vector<std::string> state_names,
                                 std::vector<std::string> input_names, std::vector<double> input_lo,
                                 std::vector<double> input_hi)
    : state_names_(std::move(state_names)),
      input_names_(std::move(input_names)),
      input_lo_(std::move(input_lo)),
      input_hi_(std::move(input_hi)) {
  if (state_names_.empty() || input_names_.empty()) {
    throw Error(Errc::invalid_argument, "system needs at least one state and one input");
  }
  check_names(state_names_, "state");
  check_names(input_names_, "input");
  check_input_box(input_lo_, input_hi_, input_names_.size());
}

bool DynamicalSystem::admissible(std::span<const double> u) const {
  if (u.size() != input_dim()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] >= input_lo_[i] && u[i] <= input_hi_[i])) return false;
  }
  return true;
}

Unicycle::Unicycle(std::vector<double> input_lo, std::vector<double> input_hi)
    : DynamicalSystem({"x", "y", "θ"}, {"v", "w"}, std::move(input_lo), std::move(input_hi)) {}

void Unicycle::step(std::span<const double> q, std::span<const double> u,
                    std::span<double> next) const {
  const double v = u[0];
  const double w = u[1];
  next[0] = q[0] + std::cos(q[2]) * v;
  next[1] = q[1] + std::sin(q[2]) * v;
  next[2] = q[2] + v * w;
}

void Unicycle::jacobians(std::span<const double> q, std::span<const double> u,
                         std::span<double> d_state, std::span<double> d_input) const {
  const double v = u[0];
  const double w = u[1];
  const double c = std::cos(q[2]);
  const double s = std::sin(q[2]);
  const double a[9] = {1, 0, -s * v, 0, 1, c * v, 0, 0, 1};
  const double b[6] = {c, 0, s, 0, w, v};
  std::copy(a, a + 9, d_state.begin());
  std::copy(b, b + 6, d_input.begin());
}

SingleIntegrator::SingleIntegrator(std::vector<std::string> state_names,
                                   std::vector<double> input_lo, std::vector<double> input_hi)
    : DynamicalSystem(state_names, prefixed(state_names), std::move(input_lo),
                      std::move(input_hi)) {}

void SingleIntegrator::step(std::span<const double> q, std::span<const double> u,
                            std::span<double> next) const {
  for (std::size_t i = 0; i < q.size(); ++i) next[i] = q[i] + u[i];
}

void SingleIntegrator::jacobians(std::span<const double> q, std::span<const double>,
                                 std::span<double> d_state, std::span<double> d_input) const {
  const std::size_t n = q.size();
  std::fill(d_state.begin(), d_state.end(), 0.0);
  std::fill(d_input.begin(), d_input.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    d_state[i * n + i] = 1.0;
    d_input[i * n + i] = 1.0;
  }
}

}  // namespace wstl
