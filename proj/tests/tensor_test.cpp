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
 // Graded tensors and brackets.

#include <gtest/gtest.h>

#include "milnor/tensor.hpp"

namespace milnor {
namespace {

TEST(Tensor, DenseIndexRoundTrip) {
  Tensor t(3, 1, 3);
  t.set({2, 3, 1}, 5);
  EXPECT_EQ(t.dim(), 27u);
  EXPECT_EQ(t.at(IndexWord{2, 3, 1}), 5);
  EXPECT_EQ(t.word_of(t.index_of({2, 3, 1})), (IndexWord{2, 3, 1}));
  EXPECT_EQ(Tensor::from_dense(3, 1, 3, t.dense()), t);
}

TEST(Tensor, BracketOfLettersIsCommutator) {
  Tensor a = Tensor::letter(2, 1), b = Tensor::letter(2, 2);
  Tensor c = bracket(a, b);
  EXPECT_EQ(c.degree(), 2);
  EXPECT_EQ(c.at(IndexWord{1, 2}), 1);
  EXPECT_EQ(c.at(IndexWord{2, 1}), -1);
  EXPECT_TRUE(bracket(a, a).is_zero());
}

TEST(Tensor, BracketIsAntisymmetricAndJacobi) {
  Tensor a = Tensor::letter(3, 1), b = Tensor::letter(3, 2), c = Tensor::letter(3, 3);
  Tensor ab = bracket(a, b);
  EXPECT_EQ(add(bracket(ab, c), bracket(c, ab)), Tensor(3, 1, 3));
  Tensor j = add(add(bracket(a, bracket(b, c)), bracket(b, bracket(c, a))), bracket(c, bracket(a, b)));
  EXPECT_TRUE(j.is_zero());
}

TEST(Tensor, LeftCollectingBracket) {
  Tensor lc = left_collecting_bracket(2, {1, 2, 2});
  EXPECT_EQ(lc, bracket(bracket(Tensor::letter(2, 1), Tensor::letter(2, 2)), Tensor::letter(2, 2)));
}

TEST(Tensor, GradeMismatchThrows) {
  EXPECT_THROW(add(Tensor::letter(2, 1), Tensor(2, 1, 2)), Error);
}

TEST(Tensor, ScaleOverflowIsDetected) {
  Tensor t = Tensor::letter(1, 1);
  t = scale(t, Coeff{1} << 62);
  EXPECT_THROW(scale(t, 4), OverflowError);
}

}  // namespace
}  // namespace milnor
