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
 // Bundled table of named link diagrams.

#ifndef MILNOR_CATALOG_HPP
#define MILNOR_CATALOG_HPP

#include <string>
#include <vector>

#include "milnor/diagram.hpp"

namespace milnor {

class UnknownLinkError : public Error {
 public:
  explicit UnknownLinkError(const std::string& name) : Error("unknown link name: " + name) {}
};

struct CatalogEntry {
  std::string name;
  std::string note;
  PDCode pd;
};

class Catalog {
 public:
  /* JSON file {"format": 1, "links": [{"name", "pd", "note"}, ...]}. */
  static Catalog load(const std::string& path);
  /* $MILNOR_CATALOG, else the source tree copy, else the installed copy. */
  static Catalog load_default();
  static std::string default_path();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  bool contains(const std::string& name) const;
  const CatalogEntry& lookup(const std::string& name) const;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::vector<CatalogEntry> entries_;
};

/* Lookup in the default catalog. */
PDCode catalog_lookup(const std::string& name);

}  // namespace milnor

#endif  // MILNOR_CATALOG_HPP
