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

#include "milnor/engine.hpp"

#include <fmt/format.h>

namespace milnor {

LiftRefused::LiftRefused(int lvl, int comp)
    : Error(fmt::format("cannot lift past level {}: component {} has a nonzero defect", lvl,
                        comp + 1)),
      level(lvl),
      component(comp) {}

ArcAssignment base_assignment(const Diagram& d) {
  ArcAssignment a;
  a.level = 2;
  const int q = d.num_components();
  for (const Arc& arc : d.arcs()) a.arcs.push_back(UniMatrix::generator(q, arc.component + 1, 2));
  return a;
}

WalkResult walk_defect(const Diagram& d, const ArcAssignment& a, int j, const LiftFn& lift) {
  const int q = d.num_components();
  const int n = a.level + 1;
  WalkResult r;
  const UniMatrix g = UniMatrix::generator(q, j + 1, n);
  const auto& steps = d.walk(j);
  if (steps.empty()) {
    // No under-crossings: one arc carrying the meridian.
    for (int id : d.component_arcs(j)) r.arc_matrices.emplace_back(id, g);
    r.defect = UniMatrix::identity(q, n);
    return r;
  }
  UniMatrix c = g;
  r.arc_matrices.emplace_back(steps[0].alpha, c);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const UniMatrix& over = a.arcs.at(steps[k].beta);
    UniMatrix b = lift ? lift(over) : section_lift(over);
    c = conjugate(c, b, steps[k].epsilon);
    if (k + 1 < steps.size()) r.arc_matrices.emplace_back(steps[k + 1].alpha, c);
  }
  r.defect = mul(inv(g), c);
  return r;
}

LevelStep step_level(const Diagram& d, const ArcAssignment& a) {
  LevelStep s;
  s.next.level = a.level + 1;
  s.next.arcs.resize(d.arcs().size());
  for (int j = 0; j < d.num_components(); ++j) {
    WalkResult w = walk_defect(d, a, j);
    for (auto& [id, m] : w.arc_matrices) s.next.arcs[id] = std::move(m);
    s.defects.push_back(std::move(w.defect));
  }
  return s;
}

Tensor psi(const Diagram& d, const ArcAssignment& a, int j) {
  UniMatrix def = walk_defect(d, a, j).defect;
  CentralPart cp = central_part(def);
  if (!cp.central)
    throw Error(fmt::format(
        "defect of component {} at level {} is not central (entry ({},{})); a lower defect is nonzero",
        j + 1, a.level, cp.row, cp.col));
  return cp.value;
}

bool wirtinger_holds(const Diagram& d, const ArcAssignment& a) {
  for (const Crossing& c : d.crossings()) {
    const UniMatrix& in = a.arcs.at(d.arc_of_edge(c.under_in));
    const UniMatrix& out = a.arcs.at(d.arc_of_edge(c.under_out));
    const UniMatrix& over = a.arcs.at(c.over_arc);
    if (!(conjugate(in, over, c.sign) == out)) return false;
  }
  return true;
}

ArcAssignment lift(const Diagram& d, const ArcAssignment& a) {
  LevelStep s = step_level(d, a);
  for (int j = 0; j < d.num_components(); ++j)
    if (!s.defects[j].is_identity()) throw LiftRefused(a.level, j);
  if (!wirtinger_holds(d, s.next))
    throw InternalError(fmt::format("Wirtinger relations fail after lifting to level {}", s.next.level));
  return s.next;
}

Tensor apply_Ij(const Tensor& omega, int j) { return bracket(Tensor::letter(omega.q(), j), omega); }

Tensor invert_Ij(const Tensor& psi_t, int j) {
  const int q = psi_t.q();
  const int m = psi_t.degree();
  if (m < 2) throw Error("invert_Ij: degree must be at least 2");
  Tensor omega(q, 1, m - 1);
  if (psi_t.is_zero()) return omega;
  // From I_j(w)(j u) = w(u) - w(j u_1..u_{n-1}) [u_n = j].
  for (std::size_t x = 0; x < omega.dim(); ++x) {
    IndexWord u = omega.word_of(x);
    Coeff acc = 0;
    for (int step = 0; step < m - 1; ++step) {
      IndexWord w{j};
      w.insert(w.end(), u.begin(), u.end());
      acc = checked_add(acc, psi_t.at(w));
      if (u.back() != j) break;
      u.pop_back();
      u.insert(u.begin(), j);
    }
    omega.add_at(x, acc);
  }
  // The all-j word is left at zero: it is not a Lie coordinate.
  if (!(apply_Ij(omega, j) == psi_t))
    throw Error(fmt::format("tensor is not in the image of I_{}", j));
  return omega;
}

std::optional<InvariantResult> first_nonvanishing(const Diagram& d, int max_degree) {
  if (max_degree < 2) throw Error("max_degree must be at least 2");
  const int q = d.num_components();
  ArcAssignment a = base_assignment(d);
  while (a.level <= max_degree) {
    LevelStep s = step_level(d, a);
    std::vector<Tensor> ps;
    bool nonzero = false;
    for (int j = 0; j < q; ++j) {
      CentralPart cp = central_part(s.defects[j]);
      if (!cp.central)
        throw InternalError(fmt::format("defect at level {} is not central", a.level));
      nonzero = nonzero || !cp.value.is_zero();
      ps.push_back(cp.value);
    }
    if (nonzero) {
      InvariantResult r;
      r.q = q;
      r.m = a.level;
      r.psi = ps;
      for (int j = 0; j < q; ++j) r.longitude.push_back(invert_Ij(ps[j], j + 1));
      return r;
    }
    if (!wirtinger_holds(d, s.next))
      throw InternalError(fmt::format("Wirtinger relations fail at level {}", s.next.level));
    a = std::move(s.next);
  }
  return std::nullopt;
}

std::vector<std::map<IndexWord, Coeff>> mu_numbers(const InvariantResult& r) {
  std::vector<std::map<IndexWord, Coeff>> out;
  for (const Tensor& t : r.longitude) {
    std::map<IndexWord, Coeff> m;
    for (const auto& [w, c] : t.pairs()) m[w] = c;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace milnor
