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
 // Integer lattices in Hermite normal form.

#include <gtest/gtest.h>

#include "milnor/lattice.hpp"

namespace milnor {
namespace {

TEST(Lattice, ReduceAndContains) {
  Lattice L = Lattice::span(3, {{2, 4, 0}, {0, 3, 3}});
  EXPECT_EQ(L.rank(), 2u);
  EXPECT_TRUE(L.contains({2, 7, 3}));
  EXPECT_FALSE(L.contains({1, 0, 0}));
  IntVector r = L.reduce({5, 1, 1});
  EXPECT_FALSE(L.contains({5, 1, 1}));
  IntVector diff{5 - r[0], 1 - r[1], 1 - r[2]};
  EXPECT_TRUE(L.contains(diff));
}

TEST(Lattice, ExpressFindsCombination) {
  Lattice L = Lattice::span(2, {{3, 1}, {0, 2}}, true);
  auto c = L.express({6, 4});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0] * 3, 6);
  EXPECT_EQ((*c)[0] + (*c)[1] * 2, 4);
  EXPECT_FALSE(L.express({1, 0}).has_value());
}

TEST(Lattice, EqualityIgnoresGenerators) {
  Lattice a = Lattice::span(2, {{2, 0}, {0, 2}});
  Lattice b = Lattice::span(2, {{2, 2}, {2, -2}, {0, 2}});
  EXPECT_TRUE(lattice_equal(a, b));
  EXPECT_FALSE(lattice_equal(a, Lattice::span(2, {{1, 1}, {0, 2}})));
}

TEST(Lattice, ElementaryDivisors) {
  EXPECT_EQ(elementary_divisors({{2, 0}, {0, 3}}), (std::vector<Coeff>{1, 6}));
  EXPECT_EQ(elementary_divisors({{3, 0, 0}, {0, 3, 0}}), (std::vector<Coeff>{3, 3}));
}

TEST(Lattice, LargeEntriesDoNotOverflow) {
  const Coeff big = Coeff{1} << 40;
  Lattice L = Lattice::span(2, {{big, big + 1}, {big + 1, big + 2}});
  EXPECT_TRUE(L.contains({1, 0}));
}

}  // namespace
}  // namespace milnor
