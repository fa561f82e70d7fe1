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
 // Crossing-wise cocycle sum: an independent route to the walk defect.

#ifndef MILNOR_QUANDLE_HPP
#define MILNOR_QUANDLE_HPP

#include <vector>

#include "milnor/engine.hpp"

namespace milnor {

/* Central part of s(B)^-eps s(A) s(B)^eps s(B^-eps A B^eps)^-1, with s the
 * zero-padded section. */
Tensor phi(const UniMatrix& a, const UniMatrix& b, int eps);

/* Sum of phi over the walk of component j. With `order` given, the terms
 * are accumulated in that permutation of the walk steps. */
Tensor cocycle_sum(const Diagram& d, const ArcAssignment& a, int j,
                   const std::vector<std::size_t>& order = {});

}  // namespace milnor

#endif  // MILNOR_QUANDLE_HPP
