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

// Acceptance gate. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails. Every criterion also has a wall-time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "properties.hpp"
#include "wstl/parser.hpp"
#include "wstl/problem_io.hpp"
#include "wstl/semantics.hpp"
#include "wstl/synthesis.hpp"

namespace {

using namespace wstl;
using namespace wstl::testing;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects sub-checks; the first failing one is reported.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      failure_ = what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  void report(const char* name, const PropertyReport& r) {
    std::ostringstream s;
    s << name << " " << r.checked - r.violations << "/" << r.checked;
    if (r.max_error > 0) s << " (max err " << format_number(r.max_error) << ")";
    note(s.str());
    expect(r.ok(), std::string(name) + ": " + (r.checked == 0 ? "nothing checked" : r.first_failure));
  }
  Outcome done() const { return {pass_, pass_ ? notes_ : failure_}; }

 private:
  bool pass_ = true;
  std::string failure_;
  std::string notes_;
};

std::string num(double v) { return format_number(v); }

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double meet2(Engine e, std::vector<double> p, double a, double b) {
  const auto w = normalize(p);
  const double x[] = {a, b};
  return aggregate::meet(e, w, x, 10.0);
}

double join2(Engine e, std::vector<double> p, double a, double b) {
  const auto w = normalize(p);
  const double x[] = {a, b};
  return aggregate::join(e, w, x, 10.0);
}

// Two-component signal holding constant sub-values, so the same numbers also
// flow through the parser and the evaluator.
double through_formula(const char* text, double a, double b) {
  const Signal s({"a", "b"}, {{a, b}});
  return rob_weighted_traditional(parse_formula(text), s, 0);
}

Outcome importance() {
  Checks c;
  const double sat = meet2(Engine::weighted_traditional, {4, 2}, 0.25, 0.25);
  const double vio = meet2(Engine::weighted_traditional, {4, 2}, -0.25, -0.25);
  c.expect(near(sat, 0.0833, 1e-3), "satisfying case gives " + num(sat));
  c.expect(near(vio, -0.1667, 1e-3), "violating case gives " + num(vio));
  const char* phi = "(a >= 0) &&[4,2] (b >= 0)";
  c.expect(near(through_formula(phi, 0.25, 0.25), sat, 1e-15), "parsed formula disagrees");
  c.expect(near(through_formula(phi, -0.25, -0.25), vio, 1e-15), "parsed formula disagrees");
  c.note("0.0833 -> " + num(sat) + ", -0.1667 -> " + num(vio));
  return c.done();
}

Outcome priority() {
  Checks c;
  const double a = join2(Engine::weighted_traditional, {10, 1}, 0.5, -0.8);
  const double b = join2(Engine::weighted_traditional, {10, 1}, -1.3, 0.5);
  c.expect(near(a, 0.4545, 1e-2), "s_A gives " + num(a));
  c.expect(near(b, 0.0455, 1e-2), "s_B gives " + num(b));
  const char* phi = "(a >= 0) ||[10,1] (b >= 0)";
  c.expect(near(through_formula(phi, 0.5, -0.8), a, 1e-15), "parsed formula disagrees");
  c.expect(near(through_formula(phi, -1.3, 0.5), b, 1e-15), "parsed formula disagrees");
  c.note("0.4545 -> " + num(a) + ", 0.0455 -> " + num(b));
  return c.done();
}

Outcome deadline_table() {
  Checks c;
  const std::vector<std::vector<double>> samples = {{0, 0, 0.5, 1}, {1, 0.5, 0, 0}, {0, 1, 0, 0.5}};
  const double gammas[] = {0.9, 0.5, 0.1};
  const double table[3][3] = {{0.330, 0.133, 0.005}, {0.420, 0.666, 0.945}, {0.367, 0.300, 0.090}};
  double worst = 0;
  for (int row = 0; row < 3; ++row) {
    const Signal s = deadline_signal(4 + row);
    const double rho = rob_traditional(deadline_formula(1.0), s);
    const double eta = rob_weighted_agm(deadline_formula(1.0), s);
    c.expect(rho == 1.0, "rho(S" + std::to_string(4 + row) + ") = " + num(rho));
    c.expect(near(eta, 0.375, 1e-9), "eta(S" + std::to_string(4 + row) + ") = " + num(eta));
    for (int col = 0; col < 3; ++col) {
      // Brute-force weighted sum: the reconstructed samples must reproduce
      // the cell before the engine is compared with it.
      double num_ = 0, den = 0;
      const auto& x = samples[static_cast<std::size_t>(row)];
      for (std::size_t k = 0; k < x.size(); ++k) {
        const double w = std::pow(gammas[col], static_cast<double>(k) - 1.0);
        num_ += w * std::max(x[k], 0.0);
        den += w;
      }
      const double cell = table[row][col];
      c.expect(near(num_ / den, cell, 0.005), "reconstructed signal misses cell " + num(cell));
      const double v = rob_weighted_agm(deadline_formula(gammas[col]), s);
      worst = std::max(worst, std::abs(v - cell));
      c.expect(near(v, cell, 0.005), "S" + std::to_string(4 + row) + ", gamma " + num(gammas[col]) +
                                         ": " + num(v) + " vs " + num(cell));
    }
  }
  c.note("9 cells, max deviation " + num(worst) + "; rho = 1 and eta = 0.375 on all rows");
  return c.done();
}

Outcome car() {
  Checks c;
  const double e2 = rob_weighted_agm(car_phi2(), car_c1());
  const double e3 = rob_weighted_agm(car_phi3(), car_c2());
  c.expect(e2 == -0.25, "eta(phi2, c1) = " + num(e2));
  c.expect(e3 == -0.25, "eta(phi3, c2) = " + num(e3));
  const Formula prefer = car_formula(1, 3, 1);
  const double v1 = rob_weighted_agm(prefer, car_c1());
  const double v2 = rob_weighted_agm(prefer, car_c2());
  c.expect(v1 < v2 && v2 < 0, "p2 > p3: c1 " + num(v1) + ", c2 " + num(v2));
  const Formula even = car_formula(1, 2, 2);
  const double w1 = rob_weighted_agm(even, car_c1());
  const double w2 = rob_weighted_agm(even, car_c2());
  c.expect(w1 == w2, "p2 = p3: c1 " + num(w1) + ", c2 " + num(w2));
  c.note("eta(phi2,c1) = eta(phi3,c2) = -0.25; p2>p3: " + num(v1) + " < " + num(v2) +
         "; p2=p3: " + num(w1) + " = " + num(w2));
  return c.done();
}

Outcome soundness() {
  Checks c;
  c.report("sign agreement", check_soundness(0xacce'0005, 1000));
  return c.done();
}

Outcome smooth_convergence() {
  Checks c;
  c.report("monotone convergence", check_smooth_convergence(0xacce'0006, 100));
  c.report("softmin/softmax bounds", check_smooth_operator_bounds(0xacce'0006, 1000));
  return c.done();
}

Outcome gradients() {
  Checks c;
  const auto r = check_gradients(0xacce'0007, 50);
  c.report("analytic vs central differences", r);
  c.expect(r.max_error < 1e-4, "max error " + num(r.max_error));
  return c.done();
}

Outcome case_study() {
  Checks c;
  const std::filesystem::path dir = WSTL_CONFIG_DIR;
  struct Run {
    const char* file;
    const double* target;  // region that must be visited during [1,10]
    const double* other;
    const char* name;
  };
  static constexpr double A[] = {7, 9, 1, 3};
  static constexpr double B[] = {1, 3, 7, 9};
  static constexpr double C[] = {7, 9, 7, 9};
  static constexpr double Unsafe[] = {3, 6, 3, 6};
  static constexpr double Boundary[] = {0, 10, 0, 10};
  auto margin = [](const Signal& s, std::size_t t, const double* b) {
    return box_margin(s, t, b[0], b[1], b[2], b[3]);
  };
  for (const Run& run : {Run{"unicycle_prefer_a.json", A, B, "pA>pB"},
                         Run{"unicycle_prefer_b.json", B, A, "pA<pB"}}) {
    const auto cfg = load_problem(dir / run.file);
    const auto start = std::chrono::steady_clock::now();
    const auto r = synthesize(cfg.problem, cfg.options);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Signal& s = r.trajectory;
    bool target = false, other = false, goal = false, safe = true, inside = true;
    for (std::size_t t = 1; t <= 20; ++t) {
      if (t <= 10) target = target || margin(s, t, run.target) > 0;
      if (t <= 10) other = other || margin(s, t, run.other) > 0;
      if (t >= 11) goal = goal || margin(s, t, C) > 0;
      safe = safe && margin(s, t, Unsafe) < 0;
      inside = inside && margin(s, t, Boundary) > 0;
    }
    const std::string tag = std::string(run.name) + ": ";
    c.expect(r.robustness_exact > 0, tag + "exact robustness " + num(r.robustness_exact));
    c.expect(target, tag + "preferred region not visited during [1,10]");
    c.expect(!other, tag + "the other region was visited instead");
    c.expect(goal, tag + "C not visited during [11,20]");
    c.expect(safe, tag + "entered Unsafe");
    c.expect(inside, tag + "left Boundary");
    c.expect(secs < 60.0, tag + "took " + num(secs) + " s");
    c.note(tag + "rho " + num(r.robustness_exact) + ", objective " + num(r.objective) + ", " +
           num(std::round(secs * 1000) / 1000) + " s");
  }
  return c.done();
}

Outcome parser() {
  Checks c;
  c.report("round trip", check_round_trip(0xacce'0009, 1000));
  // Hand-picked grammar errors, one per rule.
  const char* cases[] = {
      "",                        "x >=",                 "x >= 1 &&",         "(x >= 1",
      "x >= 1)",                 "G[3,1] x >= 0",        "G[-1,2] x >= 0",    "G[0,1.5] x >= 0",
      "F[0,2]{disc 0} x >= 0",   "F[0,2]{vec [1,2]} x >= 0", "x >= 0 &&[1,2,3] y >= 0",
      "x >= 0 && y >= 0 || z >= 0", "3 >= 1",          "x >= x",            "bool{-1}(x >= 0)",
      "F[0,2]{gauss [1] [0] 0} x >= 0", "x >= 1e999",   "x ? 1",             "G[0,2]{warp 2} x >= 0",
      "x >= 0 &&{const -1} y >= 0", "\n\n   F[0,",      "x >= 0 &&[1, 0] y >= 0"};
  PropertyReport fixed;
  for (const char* text : cases) {
    ++fixed.checked;
    const std::string_view input(text);
    try {
      (void)parse_formula(input);
      fixed.fail(std::string("accepted: \"") + text + "\"");
    } catch (const ParseError& e) {
      if (!(e.span().start <= e.span().end && e.span().end <= input.size())) {
        fixed.fail(std::string("span outside input for \"") + text + "\"");
      }
    } catch (const std::exception& e) {
      fixed.fail(std::string("non-parse error for \"") + text + "\": " + e.what());
    }
  }
  c.report("grammar error cases", fixed);
  c.report("mutated inputs", check_error_spans(0xacce'0009, 5000));
  return c.done();
}

Outcome invariances() {
  Checks c;
  c.report("scale invariance (1e-12)", check_scale_invariance(0xacce'000a, 500, 1e-12));
  c.report("DeMorgan, exact engines (1e-9)", check_demorgan(0xacce'000a, 500, 1e-9));
  // The smooth disjunction is not the exact dual of the smooth conjunction;
  // its gap is bounded instead.
  c.report("DeMorgan, smooth gap <= 2 ln N / beta", check_smooth_demorgan_gap(0xacce'000a, 500, 10.0));
  return c.done();
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "importance example (weighted conjunction)", 1, importance},
      {2, "priority example (weighted disjunction)", 1, priority},
      {3, "discounted deadline table", 1, deadline_table},
      {4, "car example, minimally violating trajectory", 1, car},
      {5, "soundness on 1000 random instances", 10, soundness},
      {6, "smooth convergence and operator bounds", 10, smooth_convergence},
      {7, "gradient check on 50 unicycle problems", 30, gradients},
      {8, "unicycle case study, priority steering", 120, case_study},
      {9, "parser round trip and error spans", 5, parser},
      {10, "weight-scale invariance and DeMorgan duality", 10, invariances},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && secs > c.budget_s) {
      v = {false, "over budget: " + format_number(secs) + " s > " + format_number(c.budget_s) + " s"};
    }
    failed += v.pass ? 0 : 1;
    std::printf("%s criterion %2d: %s [%.3f s] %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
