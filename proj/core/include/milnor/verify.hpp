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
 // Acceptance suites: published values and cross-module oracles.

#ifndef MILNOR_VERIFY_HPP
#define MILNOR_VERIFY_HPP

#include <string>
#include <vector>

#include "milnor/catalog.hpp"

namespace milnor {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/* table1, whitehead, borromean, lk3, first-example, milnor-links, oracles,
 * properties. */
const std::vector<std::string>& suite_names();

/* Runs one suite; "all" runs every suite in order. Throws ParseError for an
 * unknown suite name. */
std::vector<CheckResult> run_suite(const std::string& suite, const Catalog& catalog);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace milnor

#endif  // MILNOR_VERIFY_HPP
