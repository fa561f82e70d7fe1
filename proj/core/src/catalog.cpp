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

#include "milnor/catalog.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

namespace milnor {

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open catalog file {}", path));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("catalog {}: {}", path, e.what()));
  }
  Catalog c;
  c.path_ = path;
  if (!j.is_object() || !j.contains("links") || !j["links"].is_array())
    throw ParseError(fmt::format("catalog {}: expected an object with a \"links\" array", path));
  std::set<std::string> seen;
  for (const auto& e : j["links"]) {
    if (!e.is_object() || !e.contains("name") || !e.contains("pd"))
      throw ParseError(fmt::format("catalog {}: entry without name or pd", path));
    CatalogEntry ce;
    ce.name = e["name"].get<std::string>();
    if (!seen.insert(ce.name).second)
      throw ParseError(fmt::format("catalog {}: duplicate name {}", path, ce.name));
    ce.note = e.value("note", "");
    try {
      ce.pd = parse_pd(e["pd"].get<std::string>());
    } catch (const ParseError& err) {
      throw ParseError(fmt::format("catalog {}: entry {}: {}", path, ce.name, err.what()));
    }
    c.entries_.push_back(std::move(ce));
  }
  return c;
}

std::string Catalog::default_path() {
  if (const char* env = std::getenv("MILNOR_CATALOG"); env && *env) return env;
  if (std::filesystem::exists(MILNOR_CATALOG_SOURCE)) return MILNOR_CATALOG_SOURCE;
  return MILNOR_CATALOG_INSTALLED;
}

Catalog Catalog::load_default() { return load(default_path()); }

bool Catalog::contains(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& Catalog::lookup(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw UnknownLinkError(name);
}

PDCode catalog_lookup(const std::string& name) { return Catalog::load_default().lookup(name).pd; }

}  // namespace milnor
