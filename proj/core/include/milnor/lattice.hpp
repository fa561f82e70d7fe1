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

#ifndef MILNOR_LATTICE_HPP
#define MILNOR_LATTICE_HPP

#include <optional>
#include <vector>

#include "milnor/common.hpp"

namespace milnor {

using IntVector = std::vector<Coeff>;

/* Row-style Hermite normal form of the span of a set of integer vectors.
 * Pivots are positive and the entries above each pivot lie in [0, pivot).
 * Elimination runs in arbitrary precision; the stored basis must fit Coeff. */
class Lattice {
 public:
  explicit Lattice(std::size_t dim = 0) : dim_(dim) {}
  /* With track set, the combination of generators behind each basis row is
   * kept so that express() works. */
  static Lattice span(std::size_t dim, const std::vector<IntVector>& generators,
                      bool track = false);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<IntVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  /* Canonical representative of v modulo the lattice. */
  IntVector reduce(const IntVector& v) const;
  bool contains(const IntVector& v) const;

  /* Integer coefficients c with sum c_i g_i = v over the generators passed
   * to span(), or nothing when v is outside the lattice. Needs tracking. */
  std::optional<IntVector> express(const IntVector& v) const;

  bool operator==(const Lattice& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> piv_;
  std::vector<IntVector> combo_;  // row i of the basis = sum combo_[i][k] g_k
  std::size_t ngens_ = 0;
};

bool lattice_equal(const Lattice& a, const Lattice& b);

/* Nonzero invariant factors of the integer matrix with the given rows. */
std::vector<Coeff> elementary_divisors(const std::vector<IntVector>& rows);

}  // namespace milnor

#endif  // MILNOR_LATTICE_HPP
