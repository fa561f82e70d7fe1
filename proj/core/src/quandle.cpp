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

#include "milnor/quandle.hpp"

#include <fmt/format.h>

namespace milnor {

Tensor phi(const UniMatrix& a, const UniMatrix& b, int eps) {
  UniMatrix lhs = conjugate(section_lift(a), section_lift(b), eps);
  UniMatrix rhs = section_lift(conjugate(a, b, eps));
  CentralPart cp = central_part(mul(lhs, inv(rhs)));
  if (!cp.central)
    throw InternalError(fmt::format("cocycle term is not central (entry ({},{}))", cp.row, cp.col));
  return cp.value;
}

Tensor cocycle_sum(const Diagram& d, const ArcAssignment& a, int j,
                   const std::vector<std::size_t>& order) {
  const auto& steps = d.walk(j);
  Tensor total(d.num_components(), 1, a.level);
  std::vector<std::size_t> idx = order;
  if (idx.empty())
    for (std::size_t k = 0; k < steps.size(); ++k) idx.push_back(k);
  if (idx.size() != steps.size()) throw Error("cocycle_sum: order must permute the walk steps");
  for (std::size_t k : idx) {
    const WalkStep& s = steps.at(k);
    total += phi(a.arcs.at(s.alpha), a.arcs.at(s.beta), s.epsilon);
  }
  return total;
}

}  // namespace milnor
