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
 // Normal closures in the unitriangular group, kept as a basis whose
 // leading terms are in echelon form degree by degree.
 //
 // A matrix that is the identity below distance e from the diagonal has
 // its entries at distance e as leading term; these add under
 // multiplication. A subgroup is stored as one element per pivot of the
 // leading lattice at each degree, so membership and reduction are a
 // matter of sifting from the lowest degree up. Normality is only asked of
 // conjugation by the generators, that is by the image.

#ifndef MILNOR_CLOSURE_HPP
#define MILNOR_CLOSURE_HPP

#include <vector>

#include "milnor/lattice.hpp"
#include "milnor/unimatrix.hpp"

namespace milnor {

/* Smallest distance from the diagonal with a nonzero entry; 0 for the
 * identity. */
int leading_degree(const UniMatrix& g);

class NormalClosure {
 public:
  NormalClosure(int q, int size);

  int q() const { return q_; }
  int size() const { return n_; }

  /* Adds g and everything needed to keep the subgroup normal. */
  void insert(const UniMatrix& g);

  /* Divides g by subgroup elements until its leading degree is at least
   * `degree` or its leading term leaves the lattice at some lower degree. */
  UniMatrix sift(UniMatrix g, int degree) const;

  /* Leading terms at one degree, in echelon form; all entries at that
   * distance, row by row. At the top degree that is the single corner. */
  std::vector<IntVector> leading_rows(int degree) const;
  std::size_t num_elements() const;

 private:
  struct Row {
    std::size_t pivot = 0;
    IntVector lead;
    UniMatrix g;
  };

  void close(std::vector<UniMatrix> queue);
  const Row* find(int degree, std::size_t pivot) const;

  int q_;
  int n_;
  std::vector<std::vector<Row>> rows_;  // indexed by degree
};

}  // namespace milnor

#endif  // MILNOR_CLOSURE_HPP
