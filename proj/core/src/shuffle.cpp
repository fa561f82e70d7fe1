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

#include "milnor/shuffle.hpp"

namespace milnor {

namespace {

void extend(const IndexWord& I, std::size_t i, const IndexWord& J, std::size_t j,
            IndexWord& cur, std::vector<IndexWord>& out) {
  if (i == I.size() && j == J.size()) {
    out.push_back(cur);
    return;
  }
  if (i < I.size()) {
    cur.push_back(I[i]);
    extend(I, i + 1, J, j, cur, out);
    cur.pop_back();
  }
  if (j < J.size()) {
    cur.push_back(J[j]);
    extend(I, i, J, j + 1, cur, out);
    cur.pop_back();
  }
  if (i < I.size() && j < J.size() && I[i] == J[j]) {
    cur.push_back(I[i]);
    extend(I, i + 1, J, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndexWord> infiltration_shuffle(const IndexWord& I, const IndexWord& J) {
  std::vector<IndexWord> out;
  IndexWord cur;
  extend(I, 0, J, 0, cur, out);
  return out;
}

}  // namespace milnor
