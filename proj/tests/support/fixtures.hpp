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

#include <string>

#include "wstl/formula.hpp"
#include "wstl/signal.hpp"
#include "wstl/synthesis.hpp"

namespace wstl::testing {

/// One-component signals S4, S5, S6 of the discounted-deadline example.
Signal deadline_signal(int which);
/// F[0,3]{disc gamma} (s >= 0); gamma = 1 gives uniform weights.
Formula deadline_formula(double gamma);

/// Car scenario: Green = [7,8]x[0,2], Blocked = [3,5]x[0,2], Lane: y <= 2, all
/// Boolean-mode with magnitude 1, horizon 7.
Formula car_green();
Formula car_blocked();
Formula car_lane();
Formula car_phi1();  ///< F[0,7] Green
Formula car_phi2();  ///< G[0,7] !Blocked
Formula car_phi3();  ///< G[0,7] Lane
Formula car_formula(double p1, double p2, double p3);
Signal car_c1();  ///< straight through Blocked
Signal car_c2();  ///< leaves the lane at t = 3, 4

/// Unicycle reach-avoid task with preference weights on the A/B disjunction.
std::string unicycle_formula_text(double p_a, double p_b);
SynthesisProblem unicycle_problem(double p_a, double p_b);

/// Exact robustness of "inside box" at sample t, from raw coordinates.
double box_margin(const Signal& s, std::size_t t, double x_lo, double x_hi, double y_lo, double y_hi);

}  // namespace wstl::testing
