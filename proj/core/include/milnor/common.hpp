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
 // Shared scalar type, checked arithmetic and error classes.

#ifndef MILNOR_COMMON_HPP
#define MILNOR_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace milnor {

using Coeff = std::int64_t;

/* A word over the alphabet 1..q. Used for tensor keys and Fox indices. */
using IndexWord = std::vector<int>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* Malformed user input: PD text, catalog files, bad arguments. */
class ParseError : public Error {
 public:
  using Error::Error;
};

/* Internal consistency fault; these indicate a bug, not bad input. */
class InternalError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  OverflowError() : Error("integer coefficient overflow") {}
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

/* q^d as a size; throws if it would not fit comfortably in memory. */
std::size_t int_pow(int q, int d);

std::string word_to_string(const IndexWord& w);

}  // namespace milnor

#endif  // MILNOR_COMMON_HPP
