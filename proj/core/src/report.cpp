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

#include "milnor/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "milnor/hall.hpp"

namespace milnor {

using nlohmann::json;

json tensor_to_json(const Tensor& t) {
  json a = json::array();
  for (const auto& [w, c] : t.pairs()) a.push_back({{"word", w}, {"coeff", c}});
  return a;
}

Tensor tensor_from_json(const json& j, int q, int degree) {
  if (!j.is_array()) throw ParseError("tensor must be a JSON array");
  Tensor t(q, 1, degree);
  for (const auto& e : j) t.add_at(t.index_of(e.at("word").get<IndexWord>()), e.at("coeff").get<Coeff>());
  return t;
}

std::vector<NamedTensor> symbol_table(int q, int degree) {
  std::vector<NamedTensor> s;
  if (q != 2) return s;
  auto lc = [](const IndexWord& J) { return left_collecting_bracket(2, J); };
  if (degree == 4) {
    // Y and b3 coincide; Y comes first so that sparsest forms use it.
    s.push_back({"Y", lc({1, 2, 1, 2})});
    s.push_back({"b1", lc({1, 2, 2, 2})});
    s.push_back({"b2", lc({2, 1, 1, 1})});
    s.push_back({"b3", lc({1, 2, 2, 1})});
  } else if (degree == 5) {
    s.push_back({"A", lc({1, 2, 2, 2, 2})});
    s.push_back({"B", lc({1, 2, 2, 2, 1})});
    s.push_back({"C", lc({2, 1, 1, 1, 2})});
    s.push_back({"D", lc({2, 1, 1, 1, 1})});
    s.push_back({"E", lc({2, 1, 1, 2, 2})});
    s.push_back({"F", lc({1, 2, 2, 1, 1})});
  } else if (degree == 6) {
    s.push_back({"L", lc({1, 2, 1, 1, 1, 2})});
  }
  return s;
}

namespace {

std::string combination_text(const std::vector<NamedTensor>& symbols, const std::vector<int>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const int a = std::abs(c[i]);
    std::string term = a == 1 ? symbols[i].name : fmt::format("{} {}", a, symbols[i].name);
    if (s.empty())
      s = c[i] < 0 ? "-" + term : term;
    else
      s += (c[i] < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::optional<std::string> symbolic_form(const Tensor& t, const DeltaLattice& L,
                                         const std::vector<NamedTensor>& symbols, int bound) {
  if (symbols.empty()) return std::nullopt;
  const std::size_t k = symbols.size();
  std::vector<std::vector<int>> combos;
  std::vector<int> c(k, -bound);
  while (true) {
    combos.push_back(c);
    std::size_t i = 0;
    while (i < k && c[i] == bound) c[i++] = -bound;
    if (i == k) break;
    ++c[i];
  }
  // Fewest symbols, then smallest coefficients, then earlier symbols and
  // positive signs.
  auto key = [](const std::vector<int>& v) {
    int supp = 0, l1 = 0;
    std::vector<std::size_t> where;
    std::vector<int> neg;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      ++supp;
      l1 += std::abs(v[i]);
      where.push_back(i);
      neg.push_back(-v[i]);
    }
    return std::make_tuple(supp, l1, where, neg);
  };
  std::sort(combos.begin(), combos.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  for (const auto& v : combos) {
    Tensor s(t.q(), 1, t.degree());
    for (std::size_t i = 0; i < k; ++i)
      if (v[i] != 0) s += scale(symbols[i].value, v[i]);
    if (congruent(t, s, L)) return combination_text(symbols, v);
  }
  return std::nullopt;
}

namespace {

json lie_json(const Tensor& t) {
  Decomposition d = decompose(t);
  json j;
  json c = json::array();
  for (const auto& [w, v] : d.coeffs) c.push_back({{"word", w}, {"coeff", v}});
  j["lyndon"] = c;
  j["remainder"] = tensor_to_json(d.remainder);
  if (auto m = match_left_collecting(t))
    j["left_collecting"] = {{"word", m->first}, {"coeff", m->second}};
  else
    j["left_collecting"] = nullptr;
  auto syms = symbol_table(t.q(), t.degree());
  if (auto s = symbolic_form(t, delta_initial(t.q(), t.degree()), syms, 3))
    j["symbols"] = *s;
  else
    j["symbols"] = nullptr;
  return j;
}

}  // namespace

json compute_json(const std::string& link, const Diagram& d, const std::optional<InvariantResult>& r,
                  int max_degree, Basis basis) {
  json j;
  j["link"] = link;
  j["q"] = d.num_components();
  j["crossings"] = d.num_crossings();
  j["linking_matrix"] = linking_matrix(d);
  j["max_degree"] = max_degree;
  j["trivial"] = !r.has_value();
  if (!r) {
    j["m"] = nullptr;
    return j;
  }
  j["m"] = r->m;
  json psi = json::array(), lon = json::array(), bas = json::array();
  for (int c = 0; c < r->q; ++c) {
    psi.push_back({{"component", c + 1}, {"tensor", tensor_to_json(r->psi[c])}});
    lon.push_back({{"component", c + 1}, {"tensor", tensor_to_json(r->longitude[c])}});
    if (basis == Basis::Lyndon) {
      json b = lie_json(r->psi[c]);
      b["component"] = c + 1;
      bas.push_back(b);
    }
  }
  j["psi"] = psi;
  j["longitude"] = lon;
  j["basis"] = basis == Basis::Lyndon ? bas : json(nullptr);
  return j;
}

std::string compute_text(const std::string& link, const Diagram& d,
                         const std::optional<InvariantResult>& r, int max_degree, Basis basis) {
  std::string s = fmt::format("link {}: {} component(s), {} crossing(s)\n", link,
                              d.num_components(), d.num_crossings());
  auto lk = linking_matrix(d);
  s += "linking matrix (writhe on the diagonal):\n";
  for (const auto& row : lk) s += fmt::format("  {}\n", fmt::join(row, " "));
  if (!r) return s + fmt::format("all defects vanish up to degree {}\n", max_degree);
  s += fmt::format("first non-vanishing degree m = {}\n", r->m);
  for (int c = 0; c < r->q; ++c) {
    s += fmt::format("component {}:\n", c + 1);
    s += fmt::format("  psi       = {}\n", r->psi[c].to_string());
    if (basis == Basis::Lyndon) {
      s += fmt::format("  bracket   = {}\n", describe(r->psi[c]));
      auto syms = symbol_table(r->q, r->m);
      if (auto f = symbolic_form(r->psi[c], delta_initial(r->q, r->m), syms, 3))
        s += fmt::format("  symbols   = {}\n", *f);
    }
    s += fmt::format("  longitude = {}\n", r->longitude[c].to_string());
  }
  return s;
}

json higher_json(const std::string& link, const std::optional<DefectLedger>& l, int max_degree) {
  json j;
  j["link"] = link;
  j["max_degree"] = max_degree;
  if (!l) {
    j["m"] = nullptr;
    j["degrees"] = json::array();
    return j;
  }
  j["q"] = l->q;
  j["m"] = l->m;
  json degs = json::array();
  for (const auto& e : l->entries) {
    DeltaSummary sm = summarize(e.delta);
    json basis = json::array();
    for (const Tensor& b : e.delta.basis()) basis.push_back(tensor_to_json(b));
    json comps = json::array();
    auto syms = symbol_table(l->q, e.degree);
    for (int c = 0; c < l->q; ++c) {
      json cj = {{"component", c + 1},
                 {"raw", tensor_to_json(e.raw[c])},
                 {"reduced", tensor_to_json(e.reduced[c])}};
      if (auto f = symbolic_form(e.raw[c], e.delta, syms))
        cj["symbolic"] = *f;
      else
        cj["symbolic"] = nullptr;
      comps.push_back(cj);
    }
    degs.push_back({{"degree", e.degree},
                    {"delta", {{"rank", sm.generators}, {"torsion", sm.torsion}, {"free_rank", sm.free_rank}, {"basis", basis}}},
                    {"components", comps}});
  }
  j["degrees"] = degs;
  return j;
}

std::string higher_text(const std::string& link, const std::optional<DefectLedger>& l, int max_degree) {
  if (!l) return fmt::format("link {}: all defects vanish up to degree {}\n", link, max_degree);
  std::string s = fmt::format("link {}: first non-vanishing degree {}\n", link, l->m);
  for (const auto& e : l->entries) {
    DeltaSummary sm = summarize(e.delta);
    s += fmt::format("degree {}: delta rank {}, torsion [{}], quotient free rank {}\n", e.degree,
                     sm.generators, fmt::join(sm.torsion, ","), sm.free_rank);
    auto syms = symbol_table(l->q, e.degree);
    for (int c = 0; c < l->q; ++c) {
      s += fmt::format("  component {}: {}", c + 1, e.reduced[c].to_string());
      if (auto f = symbolic_form(e.raw[c], e.delta, syms)) s += fmt::format("  == {} mod delta", *f);
      s += "\n";
    }
  }
  return s;
}

}  // namespace milnor
