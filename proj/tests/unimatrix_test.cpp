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
 // Unipotent matrices over the tensor ring.

#include <gtest/gtest.h>

#include "milnor/magnus.hpp"
#include "milnor/unimatrix.hpp"

namespace milnor {
namespace {

GroupWord x(int j, int s = 1) { return GroupWord::generator(j, s); }

TEST(UniMatrix, InverseAndIdentity) {
  UniMatrix g = represent_word(x(1) * x(2, -1) * x(1), 2, 5);
  EXPECT_TRUE(mul(g, inv(g)).is_identity());
  EXPECT_TRUE(mul(inv(g), g).is_identity());
}

TEST(UniMatrix, IsAHomomorphism) {
  GroupWord a = x(1) * x(2), b = x(2, -1) * x(1, -1) * x(2);
  EXPECT_EQ(mul(represent_word(a, 2, 5), represent_word(b, 2, 5)), represent_word(a * b, 2, 5));
}

TEST(UniMatrix, FirstRowIsMagnusExpansion) {
  GroupWord w = commutator(x(1), x(2)) * x(1, -1);
  const int n = 5;
  UniMatrix g = represent_word(w, 2, n);
  NCSeries s = magnus_expand(w, n);
  for (int j = 2; j <= n; ++j) {
    const Tensor& e = g.entry(1, j);
    for (std::size_t i = 0; i < e.dim(); ++i) EXPECT_EQ(e.at(i), s.coeff(e.word_of(i)));
  }
}

TEST(UniMatrix, ProjectionDropsLastLevel) {
  GroupWord w = x(1) * x(2) * x(1, -1);
  EXPECT_EQ(project(represent_word(w, 2, 5)), represent_word(w, 2, 4));
  EXPECT_EQ(truncate(represent_word(w, 2, 5), 3), represent_word(w, 2, 3));
}

TEST(UniMatrix, CommutatorIsCentralAtItsDegree) {
  UniMatrix c = represent_word(commutator(x(1), x(2)), 2, 3);
  CentralPart p = central_part(c);
  ASSERT_TRUE(p.central);
  EXPECT_EQ(p.value.at(IndexWord{1, 2}), 1);
  EXPECT_EQ(p.value.at(IndexWord{2, 1}), -1);
}

TEST(UniMatrix, SectionLiftProjectsBack) {
  UniMatrix g = represent_word(x(1) * x(2), 2, 4);
  UniMatrix s = section_lift(g);
  EXPECT_EQ(s.size(), 5);
  EXPECT_EQ(project(s), g);
  EXPECT_TRUE(s.top_right().is_zero());
}

TEST(UniMatrix, ConjugationMatchesWords) {
  GroupWord a = x(1), b = x(2) * x(1);
  EXPECT_EQ(conjugate(represent_word(a, 2, 4), represent_word(b, 2, 4), 1),
            represent_word(b.inverse() * a * b, 2, 4));
}

TEST(UniMatrix, ImageCheckAcceptsWordsRejectsZeroPadding) {
  // A positive word of length 3 has no degree-4 terms, so use inverses.
  UniMatrix g = represent_word(x(1, -1) * x(2) * x(1), 2, 4);
  EXPECT_TRUE(magnus_image_check(g).pass);
  EXPECT_FALSE(magnus_image_check(section_lift(g)).pass);
}

}  // namespace
}  // namespace milnor
