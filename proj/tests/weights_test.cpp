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

#include <cmath>

#include "wstl/error.hpp"
#include "wstl/weights.hpp"

namespace wstl {
namespace {

TEST(WeightFn, DefaultIsUnit) {
  WeightFn w;
  EXPECT_TRUE(w.is_unit());
  EXPECT_EQ(w.realize(3), (std::vector<double>{1, 1, 1}));
  EXPECT_FALSE(WeightFn::constant(2).is_unit());
}

TEST(WeightFn, DiscountUsesIntervalOffsets) {
  auto w = WeightFn::discount(0.5);
  const auto v = w.realize(TimeInterval(0, 3));
  ASSERT_EQ(v.size(), 4u);
  EXPECT_DOUBLE_EQ(v[0], 2.0);
  EXPECT_DOUBLE_EQ(v[1], 1.0);
  EXPECT_DOUBLE_EQ(v[2], 0.5);
  EXPECT_DOUBLE_EQ(v[3], 0.25);
  // Operand weights start at coordinate 1.
  EXPECT_EQ(w.realize(2), (std::vector<double>{1.0, 0.5}));
}

TEST(WeightFn, GaussianBumps) {
  auto w = WeightFn::gaussian({2.0}, {1.0}, 0.1);
  const auto v = w.realize(TimeInterval(1, 3));
  EXPECT_NEAR(v[0], 0.1 + std::exp(-1.0), 1e-15);
  EXPECT_NEAR(v[1], 1.1, 1e-15);
  EXPECT_NEAR(v[2], 0.1 + std::exp(-1.0), 1e-15);
}

TEST(WeightFn, ExplicitVectorMustMatchDomain) {
  auto w = WeightFn::vector({1, 2, 3});
  EXPECT_EQ(w.realize(3), (std::vector<double>{1, 2, 3}));
  try {
    (void)w.realize(TimeInterval(0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::length_mismatch);
  }
}

TEST(WeightFn, RejectsNonPositiveWeights) {
  for (auto make : {+[] { return WeightFn::constant(0); }, +[] { return WeightFn::constant(-1); },
                    +[] { return WeightFn::discount(0); },
                    +[] { return WeightFn::vector({1, -2}); },
                    +[] { return WeightFn::vector({1, std::nan("")}); }}) {
    try {
      (void)make();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::non_positive_weight);
    }
  }
  // A gaussian with zero floor underflows far from its centre.
  auto far = WeightFn::gaussian({0.0}, {0.5}, 0.0);
  EXPECT_THROW((void)far.realize(TimeInterval(0, 40)), Error);
}

TEST(Normalize, SumsToOne) {
  const double raw[] = {4, 2};
  auto w = normalize(raw);
  EXPECT_DOUBLE_EQ(w[0], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(w[1], 1.0 / 3.0);
  const double bad[] = {1, 0};
  EXPECT_THROW(normalize(bad), Error);
}

TEST(WeightFn, Equality) {
  EXPECT_EQ(WeightFn::discount(0.9), WeightFn::discount(0.9));
  EXPECT_NE(WeightFn::discount(0.9), WeightFn::constant(0.9));
  EXPECT_EQ(WeightFn{}, WeightFn::constant(1));
}

}  // namespace
}  // namespace wstl
