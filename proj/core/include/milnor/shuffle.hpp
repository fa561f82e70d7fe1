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
 // Infiltration shuffles of index words.

#ifndef MILNOR_SHUFFLE_HPP
#define MILNOR_SHUFFLE_HPP

#include <vector>

#include "milnor/common.hpp"

namespace milnor {

/* Every resulting shuffle of I and J, with multiplicity. A position of the
 * result may come from I, from J, or from both when the letters agree. */
std::vector<IndexWord> infiltration_shuffle(const IndexWord& I, const IndexWord& J);

}  // namespace milnor

#endif  // MILNOR_SHUFFLE_HPP
