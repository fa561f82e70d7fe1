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
 // Lyndon bases of the free Lie ring and decomposition of central tensors.

#ifndef MILNOR_HALL_HPP
#define MILNOR_HALL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milnor/tensor.hpp"
#include "milnor/words.hpp"

namespace milnor {

/* Lyndon words of length n over 1..q in lexicographic order (Duval). */
std::vector<IndexWord> lyndon_words(int q, int n);

/* (1/n) sum_{d|n} mu(d) q^(n/d) */
std::size_t necklace_count(int q, int n);

bool is_lyndon(const IndexWord& w);

/* w = u v with v the longest proper Lyndon suffix. */
std::pair<IndexWord, IndexWord> standard_factorization(const IndexWord& w);

/* Bracketing along the standard factorization, as a tensor. Cached. */
const Tensor& standard_bracketing(int q, const IndexWord& w);

/* The same bracketing realised as a commutator word. */
GroupWord standard_bracket_word(const IndexWord& w);

struct Decomposition {
  std::map<IndexWord, Coeff> coeffs;  // Lyndon word -> coefficient
  Tensor remainder;                   // zero iff the input is a Lie element
};

/* Exact integer decomposition over the Lyndon basis. Uses that the
 * bracketing of w is w plus lexicographically larger words. */
Decomposition decompose(const Tensor& t);

/* Coefficients in lyndon_words order; throws if t is not a Lie element. */
std::vector<Coeff> lie_coordinates(const Tensor& t);
Tensor from_lie_coordinates(int q, int degree, const std::vector<Coeff>& c);

/* A single left-collecting bracket c [..[l^(j1), l^(j2)],..] equal to t,
 * preferring the lexicographically smallest J. */
std::optional<std::pair<IndexWord, Coeff>> match_left_collecting(const Tensor& t);

/* Integer combination of the given tensors equal to t, if one exists. */
std::optional<std::vector<Coeff>> express_in(const Tensor& t, const std::vector<Tensor>& symbols);

/* Readable form: a left-collecting bracket when one matches, else the
 * Lyndon combination, else raw coefficients. */
std::string describe(const Tensor& t);

/* "[[1,2],1]" style rendering of a left-collecting index word. */
std::string left_collecting_string(const IndexWord& J);

}  // namespace milnor

#endif  // MILNOR_HALL_HPP
