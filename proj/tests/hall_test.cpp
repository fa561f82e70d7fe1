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
 // Lyndon words and Hall basis coordinates.

#include <gtest/gtest.h>

#include "milnor/hall.hpp"
#include "milnor/tensor.hpp"

namespace milnor {
namespace {

TEST(Hall, NecklaceCounts) {
  EXPECT_EQ(necklace_count(2, 4), 3u);
  EXPECT_EQ(necklace_count(2, 5), 6u);
  EXPECT_EQ(necklace_count(3, 3), 8u);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(lyndon_words(2, n).size(), necklace_count(2, n));
}

TEST(Hall, LyndonWords) {
  EXPECT_TRUE(is_lyndon({1, 1, 2}));
  EXPECT_FALSE(is_lyndon({1, 2, 1}));
  EXPECT_FALSE(is_lyndon({1, 1}));
  auto f = standard_factorization({1, 1, 2, 1, 2});
  EXPECT_EQ(f.first, (IndexWord{1, 1, 2}));
  EXPECT_EQ(f.second, (IndexWord{1, 2}));
}

TEST(Hall, CoordinatesRoundTrip) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Coeff> c(necklace_count(2, n));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Coeff>(i) * 3 - 2;
    EXPECT_EQ(lie_coordinates(from_lie_coordinates(2, n, c)), c);
  }
}

TEST(Hall, NonLieElementIsRejected) {
  Tensor t(2, 1, 2);
  t.set({1, 2}, 1);
  EXPECT_THROW(lie_coordinates(t), Error);
}

TEST(Hall, MatchesLeftCollecting) {
  const Tensor t = scale(left_collecting_bracket(2, {1, 2, 2, 1}), -2);
  auto m = match_left_collecting(t);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(scale(left_collecting_bracket(2, m->first), m->second), t);
  EXPECT_FALSE(match_left_collecting(add(t, left_collecting_bracket(2, {2, 1, 1, 1}))).has_value());
}

TEST(Hall, ExpressInSymbols) {
  Tensor a = left_collecting_bracket(2, {1, 2, 2}), b = left_collecting_bracket(2, {1, 2, 1});
  auto c = express_in(sub(scale(a, 3), b), {a, b});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<Coeff>{3, -1}));
}

}  // namespace
}  // namespace milnor
