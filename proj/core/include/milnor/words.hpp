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
 // Free group words and Fox calculus coefficients.

#ifndef MILNOR_WORDS_HPP
#define MILNOR_WORDS_HPP

#include <map>
#include <string>
#include <vector>

#include "milnor/common.hpp"

namespace milnor {

struct Letter {
  int gen;   // 1-based generator index
  int sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/* A freely reduced word. Construction always reduces. */
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(const std::vector<Letter>& letters);

  static GroupWord generator(int j, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& o) const;
  GroupWord pow(int e) const;

  bool operator==(const GroupWord&) const = default;

  /* Form "x1 x2^-1 x1"; the empty word renders as "1". */
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/* Free reduction by a single stack pass. q = 0 skips the range check. */
GroupWord reduce(const std::vector<Letter>& raw, int q = 0);

/* [g,h] = g h g^-1 h^-1 */
GroupWord commutator(const GroupWord& g, const GroupWord& h);

/* [[...[[x_j1, x_j2], x_j3] ...], x_jn]; needs |J| >= 2. */
GroupWord left_collecting_word(const IndexWord& J);

/* Coefficient of X_{i1}...X_{in} in the Magnus expansion of y.
 * Equivalently the augmented higher Fox derivative. Empty I gives 1. */
Coeff fox_coefficient(const GroupWord& y, const IndexWord& I);

/* All coefficients of a fixed degree d over the alphabet 1..q, in
 * lexicographic order of the index word. */
std::vector<Coeff> fox_coefficients(const GroupWord& y, int q, int d);

/* Homomorphic image under x_j -> images[j]. */
GroupWord substitute(const GroupWord& w, const std::map<int, GroupWord>& images);

/* Longitude words of the m-component Milnor link (k = 1..m). */
GroupWord milnor_link_longitude(int m, int k);

}  // namespace milnor

#endif  // MILNOR_WORDS_HPP
