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
 // Level-graded multilinear tensors: the entries of unipotent matrices.
 //
 // A tensor with start level s and degree d stands for
 //   sum_w c(w) lambda_s^(w1) lambda_{s+1}^(w2) ... lambda_{s+d-1}^(wd)
 // with w running over words of length d in 1..q. Storage is dense in
 // lexicographic order; an empty coefficient vector means zero.

#ifndef MILNOR_TENSOR_HPP
#define MILNOR_TENSOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "milnor/common.hpp"

namespace milnor {

class Tensor {
 public:
  Tensor() = default;
  /* The zero tensor of the given grade. */
  Tensor(int q, int start_level, int degree);

  static Tensor unit(int q, int start_level = 1);
  /* lambda_{start}^{(j)} */
  static Tensor letter(int q, int j, int start_level = 1);
  static Tensor from_pairs(int q, int start_level, int degree,
                           const std::vector<std::pair<IndexWord, Coeff>>& pairs);
  static Tensor from_dense(int q, int start_level, int degree, std::vector<Coeff> dense);

  int q() const { return q_; }
  int start_level() const { return start_; }
  int degree() const { return degree_; }
  std::size_t dim() const;

  bool is_zero() const { return c_.empty(); }
  Coeff at(std::size_t index) const { return c_.empty() ? 0 : c_[index]; }
  Coeff at(const IndexWord& w) const;
  void set(const IndexWord& w, Coeff v);
  void add_at(std::size_t index, Coeff v);

  /* Stored coefficients; empty when zero. */
  const std::vector<Coeff>& raw() const { return c_; }
  /* Dense coefficients, always of size dim(). */
  std::vector<Coeff> dense() const;
  /* Nonzero entries in lexicographic order. */
  std::vector<std::pair<IndexWord, Coeff>> pairs() const;

  IndexWord word_of(std::size_t index) const;
  std::size_t index_of(const IndexWord& w) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor operator-() const;

  /* Same grade and same coefficients. */
  bool operator==(const Tensor& o) const;
  bool same_grade(const Tensor& o) const {
    return q_ == o.q_ && start_ == o.start_ && degree_ == o.degree_;
  }

  /* "{1212:2, 1122:-1}" style, keys in lexicographic order. */
  std::string to_string() const;
  /* Monomial sum such as "2 l1^(1) l2^(2) - l1^(2) l2^(1)". */
  std::string to_monomials() const;

 private:
  void prune();

  int q_ = 0;
  int start_ = 1;
  int degree_ = 0;
  std::vector<Coeff> c_;
};

using CentralTensor = Tensor;

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, Coeff k);

/* Product of tensors on adjacent level intervals. */
Tensor concat_mul(const Tensor& a, const Tensor& b);

/* out += a * b, where out is dense of size q^(da+db). */
void accumulate_concat(std::vector<Coeff>& out, const Tensor& a, const Tensor& b);

/* Move to start level + r. */
Tensor shift(const Tensor& a, int r);

/* Graded bracket [a,b] = a * shift(b, da) - b * shift(a, db). Both arguments
 * are read at start level 1 and the result starts at level 1. */
Tensor bracket(const Tensor& a, const Tensor& b);

/* Fold of bracket over the letters of J. */
Tensor left_collecting_bracket(int q, const IndexWord& J);

}  // namespace milnor

#endif  // MILNOR_TENSOR_HPP
