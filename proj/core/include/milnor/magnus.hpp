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
 // Truncated non-commutative power series: the classical Magnus expansion,
 // kept as an independent oracle for the matrix representation.

#ifndef MILNOR_MAGNUS_HPP
#define MILNOR_MAGNUS_HPP

#include <map>

#include "milnor/words.hpp"

namespace milnor {

/* Series in Z<X_1..X_q> modulo words of length >= truncation. */
class NCSeries {
 public:
  explicit NCSeries(int truncation);
  static NCSeries one(int truncation);

  int truncation() const { return m_; }
  Coeff coeff(const IndexWord& w) const;
  void add(const IndexWord& w, Coeff v);
  const std::map<IndexWord, Coeff>& terms() const { return t_; }

  bool operator==(const NCSeries& o) const { return m_ == o.m_ && t_ == o.t_; }

 private:
  int m_;
  std::map<IndexWord, Coeff> t_;
};

NCSeries series_mul(const NCSeries& a, const NCSeries& b);

/* x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ... */
NCSeries magnus_expand(const GroupWord& w, int truncation);

}  // namespace milnor

#endif  // MILNOR_MAGNUS_HPP
