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
 // Free group words and Fox calculus.

#include <gtest/gtest.h>

#include "milnor/words.hpp"

namespace milnor {
namespace {

GroupWord x(int j, int s = 1) { return GroupWord::generator(j, s); }

TEST(Words, ReductionCancelsAdjacentInverses) {
  GroupWord w = x(1) * x(2) * x(2, -1) * x(1, -1);
  EXPECT_TRUE(w.empty());
  EXPECT_EQ((x(1) * x(2)).inverse(), x(2, -1) * x(1, -1));
}

TEST(Words, CommutatorOfEqualGeneratorsIsTrivial) {
  EXPECT_TRUE(commutator(x(1), x(1)).empty());
  EXPECT_EQ(commutator(x(1), x(2)).length(), 4u);
}

TEST(Fox, DegreeOneCountsExponentSum) {
  GroupWord w = x(1) * x(2) * x(1) * x(2, -1) * x(1);
  EXPECT_EQ(fox_coefficient(w, {1}), 3);
  EXPECT_EQ(fox_coefficient(w, {2}), 0);
}

TEST(Fox, CommutatorHasUnitCoefficientOnItsWord) {
  const GroupWord c = commutator(x(1), x(2));
  EXPECT_EQ(fox_coefficient(c, {1, 2}), 1);
  EXPECT_EQ(fox_coefficient(c, {2, 1}), -1);
  EXPECT_EQ(fox_coefficient(c, {1, 1}), 0);
}

TEST(Fox, InverseGeneratorAlternates) {
  // x^-1 = 1 - X + X^2 - ...
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(fox_coefficient(x(1, -1), IndexWord(n, 1)), n % 2 ? -1 : 1);
}

TEST(Words, SubstitutionMapsGenerators) {
  GroupWord w = x(1) * x(2);
  GroupWord s = substitute(w, {{1, x(2)}, {2, x(1, -1)}});
  EXPECT_EQ(s, x(2) * x(1, -1));
}

TEST(Words, MilnorLongitudeIsNonTrivial) {
  for (int m = 3; m <= 5; ++m)
    for (int k = 1; k <= m; ++k) EXPECT_FALSE(milnor_link_longitude(m, k).empty()) << m << " " << k;
}

}  // namespace
}  // namespace milnor
