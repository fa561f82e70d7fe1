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
 // Upper unitriangular matrices with tensor entries; the unipotent Magnus
 // representation of the free group.

#ifndef MILNOR_UNIMATRIX_HPP
#define MILNOR_UNIMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "milnor/tensor.hpp"
#include "milnor/words.hpp"

namespace milnor {

/* Entry (i,j), 1 <= i < j <= size, starts at level i and has degree j - i.
 * The diagonal is an implicit 1. */
class UniMatrix {
 public:
  UniMatrix() = default;
  static UniMatrix identity(int q, int size);
  static UniMatrix generator(int q, int j, int size);

  int q() const { return q_; }
  int size() const { return n_; }

  const Tensor& entry(int i, int j) const;
  void set_entry(int i, int j, Tensor t);
  const Tensor& top_right() const { return entry(1, n_); }

  bool is_identity() const;
  bool operator==(const UniMatrix& o) const;

  /* One line per nonzero entry, "(i,j): tensor". */
  std::string to_string() const;

 private:
  UniMatrix(int q, int size);
  std::size_t slot(int i, int j) const;

  int q_ = 0;
  int n_ = 0;
  std::vector<Tensor> e_;
};

UniMatrix mul(const UniMatrix& a, const UniMatrix& b);
UniMatrix inv(const UniMatrix& a);
UniMatrix represent_word(const GroupWord& w, int q, int size);

/* Top-left (size-1) corner. */
UniMatrix project(const UniMatrix& a);
/* Top-left corner of the given size. */
UniMatrix truncate(const UniMatrix& a, int size);

struct CentralPart {
  bool central = false;
  Tensor value;         // entry (1,size) when central
  int row = 0, col = 0; // first offending entry otherwise
};
CentralPart central_part(const UniMatrix& a);

/* Zero-padded section: new column copied down the diagonal by one level,
 * new top-right entry zero. */
UniMatrix section_lift(const UniMatrix& a);

/* B^-eps A B^eps */
UniMatrix conjugate(const UniMatrix& a, const UniMatrix& b, int eps);

struct ImageCheck {
  bool pass = true;
  IndexWord J, K;
};
/* Infiltration-shuffle test of the first row: a_J a_K = sum over Sh(J,K). */
ImageCheck magnus_image_check(const UniMatrix& a);

}  // namespace milnor

#endif  // MILNOR_UNIMATRIX_HPP
