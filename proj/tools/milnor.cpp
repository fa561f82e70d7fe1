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
 // milnor: Milnor invariants of links from planar diagram codes.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "milnor/catalog.hpp"
#include "milnor/diagram.hpp"
#include "milnor/engine.hpp"
#include "milnor/higher.hpp"
#include "milnor/report.hpp"
#include "milnor/verify.hpp"

namespace {

enum Exit { kOk = 0, kParse = 1, kUnknown = 2, kTrivial = 3, kVerify = 4 };

struct LinkArgs {
  std::string name;
  std::string pd_file;
  int max_degree = 8;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw milnor::ParseError(fmt::format("cannot open '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/* Label and diagram for --name or --pd. */
std::pair<std::string, milnor::Diagram> resolve(const LinkArgs& a) {
  if (!a.name.empty()) {
    milnor::Catalog cat = milnor::Catalog::load_default();
    return {a.name, milnor::Diagram::build(cat.lookup(a.name).pd)};
  }
  milnor::PDCode pd = milnor::parse_pd(read_file(a.pd_file));
  return {a.pd_file, milnor::Diagram::build(pd)};
}

int run_compute(const LinkArgs& a, const std::string& basis) {
  auto [label, d] = resolve(a);
  auto r = milnor::first_nonvanishing(d, a.max_degree);
  const milnor::Basis b = basis == "raw" ? milnor::Basis::Raw : milnor::Basis::Lyndon;
  if (a.format == "json")
    fmt::print("{}\n", milnor::compute_json(label, d, r, a.max_degree, b).dump(2));
  else
    fmt::print("{}", milnor::compute_text(label, d, r, a.max_degree, b));
  return r ? kOk : kTrivial;
}

int run_higher(const LinkArgs& a, const std::string& section) {
  auto [label, d] = resolve(a);
  const milnor::SectionKind kind = section == "zeropad"   ? milnor::SectionKind::ZeroPad
                                   : section == "witness" ? milnor::SectionKind::Witness
                                                          : milnor::SectionKind::Closure;
  std::optional<milnor::DefectLedger> l;
  if (d.num_components() > 1) l = milnor::higher_mu(d, a.max_degree, kind);
  if (a.format == "json")
    fmt::print("{}\n", milnor::higher_json(label, l, a.max_degree).dump(2));
  else
    fmt::print("{}", milnor::higher_text(label, l, a.max_degree));
  return l ? kOk : kTrivial;
}

int run_verify(const std::string& suite, const std::string& format) {
  milnor::Catalog cat = milnor::Catalog::load_default();
  auto checks = milnor::run_suite(suite, cat);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks)
      j.push_back({{"suite", c.suite}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    fmt::print("{}\n", j.dump(2));
  } else {
    for (const auto& c : checks) {
      fmt::print("[{}] {}: {}", c.pass ? "PASS" : "FAIL", c.suite, c.name);
      if (!c.detail.empty()) fmt::print("  ({})", c.detail);
      fmt::print("\n");
    }
    std::size_t failed = 0;
    for (const auto& c : checks) failed += !c.pass;
    fmt::print("{} checks, {} failed\n", checks.size(), failed);
  }
  return milnor::all_passed(checks) ? kOk : kVerify;
}

int run_catalog(const std::string& filter, const std::string& format) {
  milnor::Catalog cat = milnor::Catalog::load_default();
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : cat.entries()) {
    if (!filter.empty() && e.name.find(filter) == std::string::npos) continue;
    milnor::Diagram d = milnor::Diagram::build(e.pd);
    auto lk = milnor::linking_matrix(d);
    if (format == "json") {
      j.push_back({{"name", e.name}, {"q", d.num_components()}, {"crossings", d.num_crossings()},
                   {"linking_matrix", lk}, {"note", e.note}});
      continue;
    }
    std::vector<std::string> rows;
    for (const auto& r : lk) rows.push_back(fmt::format("{}", fmt::join(r, " ")));
    fmt::print("{:<12} q={} crossings={:<3} lk=[{}]{}\n", e.name, d.num_components(), d.num_crossings(),
               fmt::join(rows, "; "), e.note.empty() ? "" : "  " + e.note);
  }
  if (format == "json") fmt::print("{}\n", j.dump(2));
  return kOk;
}

void link_options(CLI::App* sub, LinkArgs& a, int default_degree) {
  a.max_degree = default_degree;
  auto* n = sub->add_option("--name", a.name, "catalog name, e.g. 5_1^2");
  auto* p = sub->add_option("--pd", a.pd_file, "file holding a PD code ('-' for stdin)");
  n->excludes(p);
  sub->add_option("--max-degree", a.max_degree, "highest degree examined")
      ->check(CLI::Range(2, 12))
      ->capture_default_str();
  sub->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->callback([sub, n, p] {
    if (n->count() + p->count() != 1) throw CLI::ValidationError("exactly one of --name or --pd is required");
    (void)sub;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor invariants of links from planar diagram codes"};
  app.require_subcommand(1);

  LinkArgs compute_args, higher_args;
  std::string basis = "lyndon", section = "closure", suite = "all", verify_format = "text", filter, catalog_format = "text";

  auto* compute = app.add_subcommand("compute", "first non-vanishing invariant");
  link_options(compute, compute_args, 8);
  compute->add_option("--basis", basis, "tensor rendering")
      ->check(CLI::IsMember({"lyndon", "raw"}))
      ->capture_default_str();

  auto* higher = app.add_subcommand("higher", "refined invariants above the first obstruction");
  link_options(higher, higher_args, 6);
  higher->add_option("--section", section, "how defects are divided by earlier ones")
      ->check(CLI::IsMember({"closure", "zeropad", "witness"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites = milnor::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "suite to run")->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--format", verify_format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* catalog = app.add_subcommand("catalog", "list bundled links");
  catalog->add_option("--filter", filter, "substring of the name");
  catalog->add_option("--format", catalog_format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*compute) return run_compute(compute_args, basis);
    if (*higher) return run_higher(higher_args, section);
    if (*verify) return run_verify(suite, verify_format);
    if (*catalog) return run_catalog(filter, catalog_format);
  } catch (const milnor::UnknownLinkError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUnknown;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kParse;
  }
  return kOk;
}
