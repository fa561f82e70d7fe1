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
 // Magnus expansion and infiltration shuffles.

#include <gtest/gtest.h>

#include <algorithm>

#include "milnor/magnus.hpp"
#include "milnor/shuffle.hpp"
#include "milnor/words.hpp"

namespace milnor {
namespace {

TEST(Shuffle, CountsWithOverlaps) {
  // Sh(1,1) = {11, 11, 1}; Sh(1,2) = {12, 21}.
  auto s = infiltration_shuffle({1}, {1});
  std::sort(s.begin(), s.end());
  EXPECT_EQ(s, (std::vector<IndexWord>{{1}, {1, 1}, {1, 1}}));
  EXPECT_EQ(infiltration_shuffle({1}, {2}).size(), 2u);
}

TEST(Magnus, InverseExpansionIsGeometric) {
  NCSeries s = magnus_expand(GroupWord::generator(2, -1), 6);
  for (int n = 1; n < 6; ++n) EXPECT_EQ(s.coeff(IndexWord(n, 2)), n % 2 ? -1 : 1);
}

TEST(Magnus, IsMultiplicative) {
  GroupWord a = GroupWord::generator(1) * GroupWord::generator(2, -1);
  GroupWord b = commutator(GroupWord::generator(2), GroupWord::generator(1));
  EXPECT_EQ(series_mul(magnus_expand(a, 5), magnus_expand(b, 5)), magnus_expand(a * b, 5));
}

TEST(Magnus, AgreesWithFox) {
  GroupWord w = commutator(GroupWord::generator(1), commutator(GroupWord::generator(1), GroupWord::generator(2)));
  NCSeries s = magnus_expand(w, 5);
  for (const auto& [word, c] : s.terms())
    if (!word.empty()) EXPECT_EQ(c, fox_coefficient(w, word)) << word_to_string(word);
}

TEST(Magnus, CoefficientsSatisfyShuffleRelation) {
  GroupWord w = commutator(GroupWord::generator(1), GroupWord::generator(2)) * GroupWord::generator(1);
  NCSeries s = magnus_expand(w, 6);
  const IndexWord I{1, 2}, J{1};
  Coeff rhs = 0;
  for (const IndexWord& k : infiltration_shuffle(I, J)) rhs += s.coeff(k);
  EXPECT_EQ(s.coeff(I) * s.coeff(J), rhs);
}

}  // namespace
}  // namespace milnor
