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


#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wstl/parser.hpp"

namespace wstl::testing {
namespace {

const std::vector<std::string> kXY = {"x", "y"};

Formula boolean_box(const char* name, double x_lo, double x_hi, double y_lo, double y_hi) {
  const double lo[] = {x_lo, y_lo};
  const double hi[] = {x_hi, y_hi};
  return box_region(name, lo, hi, kXY, PredicateMode::boolean(1.0));
}

Signal car_path(bool detour) {
  std::vector<std::vector<double>> rows;
  for (int t = 0; t <= 7; ++t) {
    const double y = detour && (t == 3 || t == 4) ? 3.0 : 1.0;
    rows.push_back({t + 0.5, y});
  }
  return Signal(kXY, rows);
}

}  // namespace

Signal deadline_signal(int which) {
  switch (which) {
    case 4: return Signal({"s"}, {{0.0}, {0.0}, {0.5}, {1.0}});
    case 5: return Signal({"s"}, {{1.0}, {0.5}, {0.0}, {0.0}});
    case 6: return Signal({"s"}, {{0.0}, {1.0}, {0.0}, {0.5}});
    default: throw std::invalid_argument("deadline signals are S4, S5 and S6");
  }
}

Formula deadline_formula(double gamma) {
  return Formula::eventually(TimeInterval(0, 3), Formula::predicate({{{"s", 1.0}}, 0.0}),
                             gamma == 1.0 ? WeightFn{} : WeightFn::discount(gamma));
}

Formula car_green() { return boolean_box("Green", 7, 8, 0, 2); }
Formula car_blocked() { return boolean_box("Blocked", 3, 5, 0, 2); }
Formula car_lane() {
  return Formula::predicate({{{"y", -1.0}}, 2.0}, PredicateMode::boolean(1.0));
}

Formula car_phi1() { return Formula::eventually(TimeInterval(0, 7), car_green()); }
Formula car_phi2() { return Formula::always(TimeInterval(0, 7), Formula::negation(car_blocked())); }
Formula car_phi3() { return Formula::always(TimeInterval(0, 7), car_lane()); }

Formula car_formula(double p1, double p2, double p3) {
  return Formula::conjunction({car_phi1(), car_phi2(), car_phi3()}, WeightFn::vector({p1, p2, p3}));
}

Signal car_c1() { return car_path(false); }
Signal car_c2() { return car_path(true); }

std::string unicycle_formula_text(double p_a, double p_b) {
  const std::string pa = format_number(p_a);
  const std::string pb = format_number(p_b);
  return "(F[1,10] ((x >= 7 && x <= 9 && y >= 1 && y <= 3) ||[" + pa + "," + pb +
         "] (x >= 1 && x <= 3 && y >= 7 && y <= 9)))"
         " && (F[11,20] (x >= 7 && x <= 9 && y >= 7 && y <= 9))"
         " && (G[1,20] !(x >= 3 && x <= 6 && y >= 3 && y <= 6))"
         " && (G[1,20] (x >= 0 && x <= 10 && y >= 0 && y <= 10))";
}

SynthesisProblem unicycle_problem(double p_a, double p_b) {
  SynthesisProblem p;
  p.system = std::make_shared<Unicycle>(std::vector<double>{-2, -2}, std::vector<double>{2, 2});
  p.q0 = {1.0, 1.0, std::numbers::pi / 4};
  p.horizon = 20;
  p.formula = parse_formula(unicycle_formula_text(p_a, p_b));
  p.lambda = 0.05;
  p.semantics = {Engine::weighted_smooth, 10.0, 0.0};
  return p;
}

double box_margin(const Signal& s, std::size_t t, double x_lo, double x_hi, double y_lo, double y_hi) {
  const double x = s.at(t, *s.index_of("x"));
  const double y = s.at(t, *s.index_of("y"));
  return std::min({x - x_lo, x_hi - x, y - y_lo, y_hi - y});
}

}  // namespace wstl::testing
