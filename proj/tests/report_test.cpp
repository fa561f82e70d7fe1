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
 // JSON and text reports.

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "milnor/catalog.hpp"
#include "milnor/engine.hpp"
#include "milnor/report.hpp"

namespace milnor {
namespace {

TEST(Report, TensorJsonRoundTrip) {
  Tensor t = left_collecting_bracket(2, {1, 2, 1, 2});
  nlohmann::json j = tensor_to_json(t);
  EXPECT_EQ(tensor_from_json(j, 2, 4), t);
  EXPECT_EQ(tensor_from_json(nlohmann::json::parse(j.dump()), 2, 4), t);
  EXPECT_TRUE(tensor_from_json(nlohmann::json::array(), 2, 3).is_zero());
}

TEST(Report, SymbolTables) {
  EXPECT_EQ(symbol_table(2, 4).size(), 4u);
  EXPECT_EQ(symbol_table(2, 5).size(), 6u);
  EXPECT_EQ(symbol_table(2, 6).size(), 1u);
  EXPECT_TRUE(symbol_table(3, 4).empty());
}

TEST(Report, SymbolicFormFindsSparsest) {
  auto syms = symbol_table(2, 4);
  Tensor t = add(scale(left_collecting_bracket(2, {1, 2, 2, 2}), 2), left_collecting_bracket(2, {2, 1, 1, 1}));
  auto s = symbolic_form(t, delta_initial(2, 4), syms);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, "2 b1 + b2");
  EXPECT_EQ(*symbolic_form(scale(left_collecting_bracket(2, {1, 2, 1, 2}), -1), delta_initial(2, 4), syms), "-Y");
}

TEST(Report, ComputeJsonForWhitehead) {
  Diagram d = Diagram::build(catalog_lookup("5_1^2"));
  auto r = first_nonvanishing(d, 6);
  nlohmann::json j = compute_json("5_1^2", d, r, 6, Basis::Lyndon);
  EXPECT_EQ(j["link"], "5_1^2");
  EXPECT_EQ(j["q"], 2);
  EXPECT_FALSE(compute_text("5_1^2", d, r, 6, Basis::Raw).empty());
}

TEST(Report, TrivialResult) {
  Diagram d = Diagram::build(catalog_lookup("3_1"));
  nlohmann::json j = compute_json("3_1", d, std::nullopt, 5, Basis::Lyndon);
  EXPECT_EQ(j["link"], "3_1");
  EXPECT_TRUE(j["trivial"].get<bool>());
}

}  // namespace
}  // namespace milnor
