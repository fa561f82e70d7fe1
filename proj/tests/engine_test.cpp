/* Copyright 2026 The milnor Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Walk defects, lifting and the first non-vanishing invariant.

#include <gtest/gtest.h>

#include "milnor/catalog.hpp"
#include "milnor/engine.hpp"
#include "milnor/hall.hpp"

namespace milnor {
namespace {

Diagram load(const std::string& name) { return Diagram::build(catalog_lookup(name)); }

TEST(Engine, BaseAssignmentSatisfiesWirtinger) {
  Diagram d = load("5_1^2");
  ArcAssignment a = base_assignment(d);
  EXPECT_EQ(a.level, 2);
  EXPECT_TRUE(wirtinger_holds(d, a));
}

TEST(Engine, WhiteheadLiftsToDegreeFour) {
  Diagram d = load("5_1^2");
  ArcAssignment a = base_assignment(d);
  for (int level = 2; level < 4; ++level) {
    for (int j = 0; j < 2; ++j) EXPECT_TRUE(psi(d, a, j).is_zero()) << level;
    a = lift(d, a);
    EXPECT_TRUE(wirtinger_holds(d, a));
  }
  EXPECT_FALSE(psi(d, a, 0).is_zero());
  EXPECT_THROW(lift(d, a), LiftRefused);
}

TEST(Engine, HopfLinkHasDegreeTwoInvariant) {
  auto r = first_nonvanishing(load("2_1^2"), 4);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->m, 2);
  EXPECT_EQ(std::abs(r->psi[0].at(IndexWord{1, 2})), 1);
  EXPECT_EQ(r->psi[0], scale(r->psi[1], -1));
}

TEST(Engine, KnotsAndUnlinksAreTrivial) {
  EXPECT_FALSE(first_nonvanishing(load("3_1"), 5).has_value());
  EXPECT_FALSE(first_nonvanishing(load("0_1^2-kinks"), 5).has_value());
}

TEST(Engine, LongitudeInvertsIj) {
  auto r = first_nonvanishing(load("5_1^2"), 6);
  ASSERT_TRUE(r.has_value());
  for (int j = 0; j < r->q; ++j) {
    EXPECT_EQ(apply_Ij(r->longitude[j], j + 1), r->psi[j]);
    EXPECT_EQ(invert_Ij(r->psi[j], j + 1), r->longitude[j]);
  }
  EXPECT_NO_THROW(lie_coordinates(r->psi[0]));
}

TEST(Engine, InvertIjRejectsOutsideImage) {
  Tensor t(2, 1, 2);
  t.set({2, 1}, 1);
  EXPECT_THROW(invert_Ij(t, 1), Error);
}

TEST(Engine, MuNumbersOfWhitehead) {
  auto r = first_nonvanishing(load("5_1^2"), 6);
  ASSERT_TRUE(r.has_value());
  auto mu = mu_numbers(*r);
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_FALSE(mu[0].empty());
}

}  // namespace
}  // namespace milnor
