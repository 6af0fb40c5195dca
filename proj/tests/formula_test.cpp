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


#include <gtest/gtest.h>

#include "wstl/error.hpp"
#include "wstl/formula.hpp"
#include "wstl/parser.hpp"

namespace wstl {
namespace {

Formula pred(const char* name, double offset = 0.0) { return Formula::predicate({{{name, 1.0}}, offset}); }

TEST(Formula, HorizonOfNestedTemporals) {
  EXPECT_EQ(horizon(pred("x")), 0);
  EXPECT_EQ(horizon(parse_formula("G[0,7] F[0,3] x >= 0")), 10);
  EXPECT_EQ(horizon(parse_formula("G[1,2] (x >= 0) && F[0,5] (y >= 0)")), 5);
  EXPECT_EQ(horizon(parse_formula("!F[2,4] G[1,1] x > 0")), 5);
}

TEST(Formula, ArityAndDepth) {
  auto f = parse_formula("G[0,3] ((x >= 0) && (y >= 0) && (z >= 0))");
  EXPECT_EQ(max_arity(f), 4u);
  EXPECT_EQ(aggregation_depth(f), 2u);
  EXPECT_EQ(size(f), 5u);
  EXPECT_EQ(max_arity(pred("x")), 1u);
  EXPECT_EQ(aggregation_depth(Formula::negation(pred("x"))), 0u);
}

TEST(Formula, StripWeightsKeepsStructure) {
  auto f = parse_formula("F[0,3]{disc 0.5} ((x >= 0) &&[2,1] G[0,1]{const 3} (y >= 0))");
  auto g = strip_weights(f);
  EXPECT_EQ(to_string(g), "F[0,3] ((x >= 0) && G[0,1] (y >= 0))");
  EXPECT_EQ(strip_weights(g), g);
}

TEST(Formula, OperandCountAndWeightsValidated) {
  EXPECT_THROW(Formula::conjunction({pred("x")}), Error);
  try {
    Formula::disjunction({pred("x"), pred("y")}, WeightFn::vector({1, 2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::length_mismatch);
  }
  EXPECT_THROW(Formula::always(TimeInterval(0, 2), pred("x"), WeightFn::vector({1, 2})), Error);
}

TEST(Formula, PredicateDropsZeroTerms) {
  auto f = Formula::predicate({{{"x", 0.0}, {"y", 2.0}}, 1.0});
  const auto& p = std::get<Predicate>(f.node());
  EXPECT_EQ(p.expr.coefficients.size(), 1u);
  EXPECT_THROW(Formula::predicate({{{"x", 0.0}}, 1.0}), Error);
  EXPECT_THROW(PredicateMode::boolean(0.0), Error);
}

TEST(Formula, StructuralEquality) {
  EXPECT_EQ(parse_formula("G[0,2] x >= 1"), parse_formula("G[0,2] (x >= 1)"));
  EXPECT_NE(parse_formula("G[0,2] x >= 1"), parse_formula("F[0,2] x >= 1"));
  EXPECT_NE(parse_formula("G[0,2] x >= 1"), parse_formula("G[0,2]{disc 0.5} x >= 1"));
  EXPECT_EQ(Formula::truth(), Formula{});
}

TEST(BoxRegion, FacesPerComponent) {
  const double lo[] = {3, 0};
  const double hi[] = {5, 2};
  const std::string names[] = {"x", "y"};
  auto box = box_region("Blocked", lo, hi, names);
  EXPECT_EQ(to_string(box), "(x >= 3) && (-x >= -5) && (y >= 0) && (-y >= -2)");
  const double bad_hi[] = {3, 2};
  try {
    box_region("Flat", lo, bad_hi, names);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate_box);
  }
}

TEST(Formula, ChildrenInOrder) {
  auto f = parse_formula("(a >= 0) || (b >= 0) || (c >= 0)");
  auto kids = children(f);
  ASSERT_EQ(kids.size(), 3u);
  EXPECT_EQ(to_string(kids[2]), "c >= 0");
  EXPECT_TRUE(children(pred("x")).empty());
}

}  // namespace
}  // namespace wstl
