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

#include "milnor/higher.hpp"

#include <fmt/format.h>

#include <map>
#include <mutex>

#include "milnor/closure.hpp"
#include "milnor/engine.hpp"
#include "milnor/hall.hpp"

namespace milnor {

std::vector<Tensor> DeltaLattice::basis() const {
  std::vector<Tensor> out;
  for (const auto& row : hnf.basis()) out.push_back(Tensor::from_dense(q, 1, degree, row));
  return out;
}

DeltaLattice delta_initial(int q, int degree) {
  DeltaLattice L;
  L.q = q;
  L.degree = degree;
  L.hnf = Lattice(int_pow(q, degree));
  return L;
}

DeltaLattice delta_span(int q, int degree, const std::vector<Tensor>& generators) {
  DeltaLattice L = delta_initial(q, degree);
  std::vector<IntVector> rows;
  for (const Tensor& g : generators) {
    if (g.q() != q || g.degree() != degree) throw Error("delta_span: generator grade mismatch");
    if (!g.is_zero()) rows.push_back(g.dense());
  }
  L.hnf = Lattice::span(L.hnf.dim(), rows);
  return L;
}

Tensor reduce(const Tensor& t, const DeltaLattice& L) {
  if (t.degree() != L.degree || t.q() != L.q)
    throw Error(fmt::format("reduce: degree {} does not match lattice degree {}", t.degree(), L.degree));
  return Tensor::from_dense(t.q(), t.start_level(), t.degree(), L.hnf.reduce(t.dense()));
}

bool congruent(const Tensor& a, const Tensor& b, const DeltaLattice& L) {
  return reduce(sub(a, b), L).is_zero();
}

bool lattice_equal(const DeltaLattice& a, const DeltaLattice& b) {
  if (a.degree != b.degree || a.q != b.q) throw Error("lattice_equal: degree mismatch");
  return lattice_equal(a.hnf, b.hnf);
}

DeltaSummary summarize(const DeltaLattice& L) {
  DeltaSummary s;
  s.generators = L.hnf.rank();
  std::vector<IntVector> rows;
  for (const Tensor& b : L.basis()) rows.push_back(lie_coordinates(b));
  const std::size_t r = necklace_count(L.q, L.degree);
  auto divs = elementary_divisors(rows);
  for (Coeff e : divs)
    if (e > 1) s.torsion.push_back(e);
  s.free_rank = r - divs.size();
  return s;
}

namespace {

const UniMatrix& lyndon_commutator_matrix(int q, const IndexWord& w, int size) {
  static std::mutex mu;
  static std::map<std::tuple<int, IndexWord, int>, UniMatrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(q, w, size);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, represent_word(standard_bracket_word(w), q, size)).first;
  return it->second;
}

UniMatrix power(const UniMatrix& a, Coeff e) {
  UniMatrix base = e >= 0 ? a : inv(a);
  UniMatrix r = UniMatrix::identity(a.q(), a.size());
  for (Coeff k = 0; k < (e >= 0 ? e : -e); ++k) r = mul(r, base);
  return r;
}

}  // namespace

UniMatrix malcev_section(const UniMatrix& a) {
  const int h = a.size(), q = a.q();
  UniMatrix g = UniMatrix::identity(q, h + 1);
  for (int d = 1; d < h; ++d) {
    UniMatrix cur = mul(inv(truncate(g, h)), a);
    const Tensor& t = cur.entry(1, 1 + d);
    if (t.is_zero()) continue;
    std::vector<Coeff> c = lie_coordinates(t);
    auto ws = lyndon_words(q, d);
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (c[i] != 0) g = mul(g, power(lyndon_commutator_matrix(q, ws[i], h + 1), c[i]));
  }
  if (!(truncate(g, h) == a))
    throw InternalError("collected form does not reproduce the matrix; input is not in the image");
  return g;
}

const LedgerEntry& DefectLedger::at(int degree) const {
  for (const auto& e : entries)
    if (e.degree == degree) return e;
  throw Error(fmt::format("ledger has no entry of degree {}", degree));
}

DeltaLattice delta_next(const DefectLedger& ledger, int target) {
  std::vector<Tensor> gens;
  for (const auto& e : ledger.entries) {
    if (e.degree >= target) continue;
    std::vector<Tensor> vs = e.raw;
    for (Tensor& b : e.delta.basis()) vs.push_back(std::move(b));
    for (const IndexWord& w : lyndon_words(ledger.q, target - e.degree)) {
      const Tensor& eta = standard_bracketing(ledger.q, w);
      for (const Tensor& v : vs)
        if (!v.is_zero()) gens.push_back(bracket(v, eta));
    }
  }
  return delta_span(ledger.q, target, gens);
}

std::optional<DefectLedger> higher_mu(const Diagram& d, int max_h, SectionKind section) {
  if (max_h < 2) throw Error("max degree must be at least 2");
  const int q = d.num_components();
  DefectLedger ledger;
  ledger.q = q;
  ledger.section = section;
  ArcAssignment a = base_assignment(d);

  // Closure mode keeps the earlier defects, one size below the current
  // level. Witness mode keeps the walk word behind every arc matrix.
  std::vector<UniMatrix> kept;
  std::vector<GroupWord> arc_words;
  if (section == SectionKind::Witness)
    for (const Arc& arc : d.arcs()) arc_words.push_back(GroupWord::generator(arc.component + 1));

  for (int h = 2; h <= max_h; ++h) {
    LevelStep s;
    if (section != SectionKind::Witness) {
      s = step_level(d, a);
    } else {
      ArcAssignment lifted{a.level, {}};
      for (const GroupWord& w : arc_words) lifted.arcs.push_back(represent_word(w, q, h + 1));
      const LiftFn keep = [](const UniMatrix& x) { return x; };
      s.next.level = a.level + 1;
      s.next.arcs.resize(arc_words.size());
      std::vector<GroupWord> next_words(arc_words.size());
      for (int j = 0; j < q; ++j) {
        WalkResult w = walk_defect(d, lifted, j, keep);
        for (auto& [id, m] : w.arc_matrices) s.next.arcs[id] = std::move(m);
        s.defects.push_back(std::move(w.defect));
        GroupWord word = GroupWord::generator(j + 1);
        const auto& steps = d.walk(j);
        if (steps.empty()) {
          for (int id : d.component_arcs(j)) next_words[id] = word;
          continue;
        }
        next_words[steps[0].alpha] = word;
        for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
          const GroupWord& b = arc_words[steps[k].beta];
          word = steps[k].epsilon > 0 ? b.inverse() * word * b : b * word * b.inverse();
          next_words[steps[k + 1].alpha] = word;
        }
      }
      arc_words = std::move(next_words);
    }

    if (ledger.m == 0) {
      bool nonzero = false;
      for (const UniMatrix& D : s.defects) nonzero = nonzero || !D.is_identity();
      if (nonzero) ledger.m = h;
    }
    if (ledger.m != 0) {
      LedgerEntry e;
      e.degree = h;
      e.defects = s.defects;
      if (section != SectionKind::Closure) {
        for (const UniMatrix& D : s.defects) e.raw.push_back(D.top_right());
        e.delta = h == ledger.m ? delta_initial(q, h) : delta_next(ledger, h);
      } else {
        // The subgroup normally generated by the lifted earlier defects.
        NormalClosure N(q, h + 1);
        for (UniMatrix& k : kept) {
          k = malcev_section(k);
          N.insert(k);
        }
        std::vector<Tensor> leads;
        for (const IntVector& row : N.leading_rows(h)) leads.push_back(Tensor::from_dense(q, 1, h, row));
        e.delta = delta_span(q, h, leads);
        for (int j = 0; j < q; ++j) {
          UniMatrix r = N.sift(s.defects[j], h);
          const int lead = leading_degree(r);
          if (lead != 0 && lead < h)
            throw InternalError(fmt::format(
                "defect of component {} at degree {} is not central modulo earlier defects (degree {})",
                j + 1, h, lead));
          e.raw.push_back(r.top_right());
        }
        for (const UniMatrix& D : s.defects) kept.push_back(D);
      }
      for (const Tensor& v : e.raw) e.reduced.push_back(reduce(v, e.delta));
      ledger.entries.push_back(std::move(e));
    }
    a = std::move(s.next);
  }
  if (ledger.m == 0) return std::nullopt;
  return ledger;
}

}  // namespace milnor
