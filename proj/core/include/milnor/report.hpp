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
 // Text and JSON reports, and the named bracket symbols used in tables.

#ifndef MILNOR_REPORT_HPP
#define MILNOR_REPORT_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milnor/engine.hpp"
#include "milnor/higher.hpp"

namespace milnor {

/* [{"word": [1,2], "coeff": 1}, ...] in lexicographic order. */
nlohmann::json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const nlohmann::json& j, int q, int degree);

struct NamedTensor {
  std::string name;
  Tensor value;
};

/* Two-component symbols: Y (degree 4), L (degree 6), b1..b3 (degree 4) and
 * A..F (degree 5). Empty for other grades. */
std::vector<NamedTensor> symbol_table(int q, int degree);

/* Sparsest small combination of symbols congruent to t modulo L, as text
 * such as "2 b1 + b2 - b3". Coefficients are searched in [-bound, bound]. */
std::optional<std::string> symbolic_form(const Tensor& t, const DeltaLattice& L,
                                         const std::vector<NamedTensor>& symbols, int bound = 2);

enum class Basis { Lyndon, Raw };

nlohmann::json compute_json(const std::string& link, const Diagram& d,
                            const std::optional<InvariantResult>& r, int max_degree, Basis basis);
std::string compute_text(const std::string& link, const Diagram& d,
                         const std::optional<InvariantResult>& r, int max_degree, Basis basis);

nlohmann::json higher_json(const std::string& link, const std::optional<DefectLedger>& l, int max_degree);
std::string higher_text(const std::string& link, const std::optional<DefectLedger>& l, int max_degree);

}  // namespace milnor

#endif  // MILNOR_REPORT_HPP
