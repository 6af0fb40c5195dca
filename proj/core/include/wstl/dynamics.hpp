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
#include <string>
#include <vector>

namespace wstl {

/// Deterministic discrete-time system q(t+1) = f(q(t), u(t)) with a box of
/// admissible inputs. Jacobians are row-major: d_state is n x n, d_input is n x m.
class DynamicalSystem {
 public:
  DynamicalSystem(std::vector<std::string> state_names, std::vector<std::string> input_names,
                  std::vector<double> input_lo, std::vector<double> input_hi);
  virtual ~DynamicalSystem() = default;

  std::size_t state_dim() const noexcept { return state_names_.size(); }
  std::size_t input_dim() const noexcept { return input_names_.size(); }

  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  const std::vector<std::string>& input_names() const noexcept { return input_names_; }
  const std::vector<double>& input_lo() const noexcept { return input_lo_; }
  const std::vector<double>& input_hi() const noexcept { return input_hi_; }

  bool admissible(std::span<const double> u) const;

  virtual std::string type_name() const = 0;

  virtual void step(std::span<const double> q, std::span<const double> u,
                    std::span<double> next) const = 0;

  virtual void jacobians(std::span<const double> q, std::span<const double> u,
                         std::span<double> d_state, std::span<double> d_input) const = 0;

 private:
  std::vector<std::string> state_names_;
  std::vector<std::string> input_names_;
  std::vector<double> input_lo_;
  std::vector<double> input_hi_;
};

/// x+ = x + cos(theta) v,  y+ = y + sin(theta) v,  theta+ = theta + v w.
/// State (x, y, θ), input (v, w); the heading component is named "θ".
class Unicycle final : public DynamicalSystem {
 public:
  Unicycle(std::vector<double> input_lo, std::vector<double> input_hi);

  std::string type_name() const override { return "unicycle"; }
  void step(std::span<const double> q, std::span<const double> u,
            std::span<double> next) const override;
  void jacobians(std::span<const double> q, std::span<const double> u, std::span<double> d_state,
                 std::span<double> d_input) const override;
};

/// q+ = q + u with one input per state component, named u_<state>.
class SingleIntegrator final : public DynamicalSystem {
 public:
  SingleIntegrator(std::vector<std::string> state_names, std::vector<double> input_lo,
                   std::vector<double> input_hi);

  std::string type_name() const override { return "single_integrator"; }
  void step(std::span<const double> q, std::span<const double> u,
            std::span<double> next) const override;
  void jacobians(std::span<const double> q, std::span<const double> u, std::span<double> d_state,
                 std::span<double> d_input) const override;
};

}  // namespace wstl
