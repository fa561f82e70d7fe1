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
 // Normal closures inside the unipotent group.

#include <gtest/gtest.h>

#include "milnor/closure.hpp"
#include "milnor/lattice.hpp"

namespace milnor {
namespace {

GroupWord x(int j, int s = 1) { return GroupWord::generator(j, s); }

std::size_t rank(const std::vector<IntVector>& rows) {
  return rows.empty() ? 0 : Lattice::span(rows[0].size(), rows).rank();
}

// Entries at distance e from the diagonal, in the order leading_rows uses.
IntVector layer(const UniMatrix& g, int e) {
  IntVector out;
  for (int i = 1; i + e <= g.size(); ++i)
    for (Coeff c : g.entry(i, i + e).dense()) out.push_back(c);
  return out;
}

TEST(Closure, LeadingDegree) {
  EXPECT_EQ(leading_degree(UniMatrix::identity(2, 4)), 0);
  EXPECT_EQ(leading_degree(represent_word(x(1), 2, 4)), 1);
  EXPECT_EQ(leading_degree(represent_word(commutator(x(1), x(2)), 2, 4)), 2);
}

TEST(Closure, CommutatorGeneratesTheDerivedSubgroup) {
  NormalClosure N(2, 4);
  N.insert(represent_word(commutator(x(1), x(2)), 2, 4));
  EXPECT_EQ(rank(N.leading_rows(2)), 1u);
  EXPECT_EQ(rank(N.leading_rows(3)), 2u);

  const GroupWord c = commutator(x(1), x(2));
  for (const GroupWord& w : {c * c * c, x(2).inverse() * c * x(2), commutator(c, x(2)), commutator(x(1), c) * c})
    EXPECT_TRUE(N.sift(represent_word(w, 2, 4), 4).is_identity()) << w.length();
}

TEST(Closure, SiftStopsOutsideTheSubgroup) {
  NormalClosure N(2, 4);
  N.insert(represent_word(commutator(x(1), x(2)), 2, 4));
  UniMatrix r = N.sift(represent_word(x(1) * commutator(x(1), x(2)), 2, 4), 4);
  EXPECT_EQ(leading_degree(r), 1);
}

TEST(Closure, PowerLeavesTorsionQuotient) {
  // The closure of [x1,x2]^3 meets degree 2 in 3Z; degree 3 leads stay in 3Z too.
  NormalClosure N(2, 4);
  const GroupWord c = commutator(x(1), x(2));
  N.insert(represent_word(c * c * c, 2, 4));
  const auto rows = N.leading_rows(2);
  ASSERT_EQ(rank(rows), 1u);
  const UniMatrix cm = represent_word(c, 2, 4);
  EXPECT_FALSE(Lattice::span(rows[0].size(), rows).contains(layer(cm, 2)));
  EXPECT_TRUE(Lattice::span(rows[0].size(), rows).contains(layer(represent_word(c * c * c, 2, 4), 2)));
  EXPECT_EQ(leading_degree(N.sift(cm, 4)), 2);
}

TEST(Closure, HigherCentralElementsOnly) {
  NormalClosure N(2, 5);
  N.insert(represent_word(commutator(commutator(x(1), x(2)), x(2)), 2, 5));
  EXPECT_TRUE(N.leading_rows(2).empty());
  EXPECT_EQ(rank(N.leading_rows(3)), 1u);
  EXPECT_GT(N.num_elements(), 1u);
}

}  // namespace
}  // namespace milnor
