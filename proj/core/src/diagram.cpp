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

#include "milnor/diagram.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace milnor {

std::string PDCode::to_string() const {
  std::string s;
  for (const auto& x : crossings) {
    if (!s.empty()) s += ' ';
    s += fmt::format("X({},{},{},{})", x[0], x[1], x[2], x[3]);
  }
  return s;
}

PDCode parse_pd(const std::string& text) {
  std::string t = text;
  // Optional PD[ ... ] wrapper.
  auto first = t.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && t.compare(first, 3, "PD[") == 0) {
    auto last = t.find_last_not_of(" \t\r\n");
    if (t[last] != ']') throw ParseError("unterminated PD[...] wrapper");
    t = t.substr(first + 3, last - first - 3);
  }
  PDCode pd;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',')) ++i;
  };
  while (true) {
    skip();
    if (i >= t.size()) break;
    if (t[i] != 'X') throw ParseError(fmt::format("expected 'X' at offset {}", i));
    ++i;
    if (i >= t.size() || (t[i] != '(' && t[i] != '['))
      throw ParseError(fmt::format("expected '(' after X at offset {}", i));
    const char close = t[i] == '(' ? ')' : ']';
    ++i;
    std::vector<int> labels;
    while (true) {
      while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
      std::size_t j = i;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      if (j == i) throw ParseError(fmt::format("expected a positive integer label at offset {}", i));
      if (j - i > 9) throw ParseError("arc label too large");
      labels.push_back(std::stoi(t.substr(i, j - i)));
      i = j;
      while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
      if (i < t.size() && t[i] == ',') {
        ++i;
        continue;
      }
      if (i < t.size() && t[i] == close) {
        ++i;
        break;
      }
      throw ParseError(fmt::format("malformed crossing near offset {}", i));
    }
    if (labels.size() != 4)
      throw ParseError(fmt::format("crossing {} has {} labels, expected 4", pd.crossings.size() + 1,
                                   labels.size()));
    pd.crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
  }
  validate_pd(pd);
  return pd;
}

void validate_pd(const PDCode& pd) {
  if (pd.crossings.empty()) throw ParseError("empty PD code");
  std::map<int, int> count;
  for (const auto& x : pd.crossings)
    for (int l : x) {
      if (l < 1) throw ParseError(fmt::format("arc label {} is not positive", l));
      if (l > 1000000) throw ParseError(fmt::format("arc label {} is too large", l));
      ++count[l];
    }
  for (const auto& [l, c] : count)
    if (c != 2) throw ParseError(fmt::format("arc label {} occurs {} time(s), expected 2", l, c));
}

int Diagram::arc_of_edge(int label) const {
  if (label < 0 || label >= static_cast<int>(arc_of_.size()) || arc_of_[label] < 0)
    throw Error(fmt::format("unknown edge label {}", label));
  return arc_of_[label];
}

Diagram Diagram::build(const PDCode& pd, const BuildOptions& opts) {
  validate_pd(pd);
  const int n = static_cast<int>(pd.crossings.size());
  auto key = [](int c, int p) { return c * 4 + p; };
  std::map<int, std::vector<int>> occ;  // label -> slots
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) occ[pd.crossings[c][p]].push_back(key(c, p));

  // role[slot]: 1 incoming, 0 outgoing, -1 unknown.
  std::vector<int> role(4 * n, -1);
  std::vector<int> stack;
  auto assign = [&](int slot, int r) {
    if (role[slot] == -1) {
      role[slot] = r;
      stack.push_back(slot);
    } else if (role[slot] != r) {
      throw ParseError("PD code admits no consistent orientation");
    }
  };
  auto propagate = [&] {
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      int c = s / 4, p = s % 4, r = role[s];
      for (int o : occ[pd.crossings[c][p]])
        if (o != s) assign(o, 1 - r);
      if (p == 1 || p == 3) assign(key(c, 4 - p), 1 - r);
    }
  };
  for (int c = 0; c < n; ++c) {
    assign(key(c, 0), 1);
    assign(key(c, 2), 0);
  }
  propagate();
  for (int c = 0; c < n; ++c) {
    if (role[key(c, 1)] != -1) continue;
    // Unconstrained over-strand: fall back on label order.
    const int b = pd.crossings[c][1], d = pd.crossings[c][3];
    const bool d_to_b = (b - d == 1) || (d - b > 1);
    assign(key(c, 3), d_to_b ? 1 : 0);
    propagate();
  }

  Diagram D;
  D.crossings_.resize(n);
  const int maxlabel = occ.rbegin()->first;
  std::vector<int> next(maxlabel + 1, -1), head_cross(maxlabel + 1, -1);
  std::vector<char> head_under(maxlabel + 1, 0);
  for (int c = 0; c < n; ++c) {
    const auto& x = pd.crossings[c];
    Crossing& cr = D.crossings_[c];
    cr.under_in = x[0];
    cr.under_out = x[2];
    if (role[key(c, 3)] == 1) {
      cr.over_in = x[3];
      cr.over_out = x[1];
      cr.sign = 1;
    } else {
      cr.over_in = x[1];
      cr.over_out = x[3];
      cr.sign = -1;
    }
    next[cr.under_in] = cr.under_out;
    head_cross[cr.under_in] = c;
    head_under[cr.under_in] = 1;
    next[cr.over_in] = cr.over_out;
    head_cross[cr.over_in] = c;
    head_under[cr.over_in] = 0;
  }

  std::vector<int> comp_of(maxlabel + 1, -1);
  for (const auto& [label, slots] : occ) {
    (void)slots;
    if (comp_of[label] != -1) continue;
    std::vector<int> cyc{label};
    comp_of[label] = static_cast<int>(D.components_.size());
    for (int e = next[label]; e != label; e = next[e]) {
      if (e < 0 || comp_of[e] != -1) throw ParseError("PD code does not close up into components");
      cyc.push_back(e);
      comp_of[e] = comp_of[label];
    }
    D.components_.push_back(std::move(cyc));
  }
  const int q = static_cast<int>(D.components_.size());
  if (!opts.base_shift.empty() && static_cast<int>(opts.base_shift.size()) != q)
    throw Error("base_shift must have one entry per component");

  D.arc_of_.assign(maxlabel + 1, -1);
  D.comp_arcs_.resize(q);
  for (int j = 0; j < q; ++j) {
    const auto& cyc = D.components_[j];
    const int L = static_cast<int>(cyc.size());
    // Back up to the start of the arc holding the smallest label.
    int st = 0;
    for (int k = 0; k < L; ++k) {
      int prev = cyc[(st - 1 + L) % L];
      if (head_under[prev]) break;
      st = (st - 1 + L) % L;
    }
    std::vector<std::vector<int>> arcs;
    std::vector<int> cur;
    for (int k = 0; k < L; ++k) {
      int e = cyc[(st + k) % L];
      cur.push_back(e);
      if (head_under[e]) {
        arcs.push_back(std::move(cur));
        cur.clear();
      }
    }
    if (!cur.empty()) {
      if (!arcs.empty()) throw InternalError("arc splitting left a dangling run");
      arcs.push_back(std::move(cur));
    }
    if (!opts.base_shift.empty()) {
      const int a = static_cast<int>(arcs.size());
      const int r = ((opts.base_shift[j] % a) + a) % a;
      std::rotate(arcs.begin(), arcs.begin() + r, arcs.end());
    }
    for (auto& edges : arcs) {
      const int id = static_cast<int>(D.arcs_.size());
      for (int e : edges) D.arc_of_[e] = id;
      D.arcs_.push_back(Arc{j, std::move(edges)});
      D.comp_arcs_[j].push_back(id);
    }
  }
  for (Crossing& cr : D.crossings_) {
    cr.under_component = comp_of[cr.under_in];
    cr.over_component = comp_of[cr.over_in];
    cr.over_arc = D.arc_of_[cr.over_in];
  }
  D.walks_.resize(q);
  for (int j = 0; j < q; ++j)
    for (int id : D.comp_arcs_[j]) {
      const int last = D.arcs_[id].edges.back();
      if (!head_under[last]) continue;
      const Crossing& cr = D.crossings_[head_cross[last]];
      D.walks_[j].push_back(WalkStep{id, cr.over_arc, cr.sign});
    }
  return D;
}

std::vector<std::vector<int>> linking_matrix(const Diagram& d) {
  const int q = d.num_components();
  std::vector<std::vector<int>> twice(q, std::vector<int>(q, 0));
  std::vector<int> writhe(q, 0);
  for (const Crossing& c : d.crossings()) {
    if (c.under_component == c.over_component) {
      writhe[c.under_component] += c.sign;
    } else {
      twice[c.under_component][c.over_component] += c.sign;
      twice[c.over_component][c.under_component] += c.sign;
    }
  }
  std::vector<std::vector<int>> lk(q, std::vector<int>(q, 0));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      if (i == j) {
        lk[i][j] = writhe[i];
      } else {
        if (twice[i][j] % 2 != 0) throw InternalError("odd crossing sum between components");
        lk[i][j] = twice[i][j] / 2;
      }
    }
  return lk;
}

PDCode mirror(const PDCode& pd) {
  Diagram d = Diagram::build(pd);
  PDCode out;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const auto& x = pd.crossings[c];
    // The old over-strand becomes the under-strand; list from its entry.
    if (d.crossings()[c].sign == 1)
      out.crossings.push_back({x[3], x[0], x[1], x[2]});
    else
      out.crossings.push_back({x[1], x[2], x[3], x[0]});
  }
  return out;
}

}  // namespace milnor
