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

#include "milnor/closure.hpp"

#include <algorithm>

namespace milnor {

namespace {

/* Every entry at distance e from the diagonal, row by row. Outside the
 * image the rows below the first are independent of it. */
IntVector layer(const UniMatrix& g, int e) {
  IntVector v;
  for (int i = 1; i + e <= g.size(); ++i) {
    const IntVector d = g.entry(i, i + e).dense();
    v.insert(v.end(), d.begin(), d.end());
  }
  return v;
}

std::size_t first_nonzero(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

UniMatrix power(const UniMatrix& a, Coeff k) {
  UniMatrix base = k >= 0 ? a : inv(a);
  UniMatrix r = UniMatrix::identity(a.q(), a.size());
  for (Coeff e = k >= 0 ? k : -k; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, base);
    if (e > 1) base = mul(base, base);
  }
  return r;
}

UniMatrix commutator(const UniMatrix& a, const UniMatrix& b) {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Coeff floor_div(Coeff a, Coeff b) {
  Coeff d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

}  // namespace

int leading_degree(const UniMatrix& g) {
  for (int e = 1; e < g.size(); ++e)
    for (int i = 1; i + e <= g.size(); ++i)
      if (!g.entry(i, i + e).is_zero()) return e;
  return 0;
}

NormalClosure::NormalClosure(int q, int size) : q_(q), n_(size), rows_(size) {
  if (size < 2) throw Error("NormalClosure: size must be at least 2");
}

const NormalClosure::Row* NormalClosure::find(int degree, std::size_t pivot) const {
  for (const Row& r : rows_[degree])
    if (r.pivot == pivot) return &r;
  return nullptr;
}

void NormalClosure::insert(const UniMatrix& g) {
  if (g.q() != q_ || g.size() != n_) throw Error("NormalClosure::insert: shape mismatch");
  close({g});
}

void NormalClosure::close(std::vector<UniMatrix> queue) {
  std::vector<UniMatrix> gens;
  for (int i = 1; i <= q_; ++i) gens.push_back(UniMatrix::generator(q_, i, n_));

  // Every new basis element brings its commutators with the generators and
  // with the rest of the basis; those decide normality and closure.
  auto spawn = [&](const UniMatrix& b, int e) {
    if (e + 1 < n_)
      for (const UniMatrix& x : gens) queue.push_back(commutator(b, x));
    for (int d = 1; d + e < n_; ++d)
      for (const Row& r : rows_[d]) queue.push_back(commutator(b, r.g));
  };

  while (!queue.empty()) {
    UniMatrix g = std::move(queue.back());
    queue.pop_back();
    for (;;) {
      const int e = leading_degree(g);
      if (e == 0) break;
      IntVector t = layer(g, e);
      const std::size_t p = first_nonzero(t);
      auto& level = rows_[e];
      auto it = std::find_if(level.begin(), level.end(), [&](const Row& r) { return r.pivot == p; });
      if (it == level.end()) {
        if (t[p] < 0) {
          g = inv(g);
          t = layer(g, e);
        }
        spawn(g, e);
        level.push_back({p, t, g});
        break;
      }
      if (t[p] % it->lead[p] == 0) {
        g = mul(g, power(it->g, -(t[p] / it->lead[p])));
        continue;
      }
      // Euclid on the pivot column, carried out on the group elements.
      UniMatrix a = it->g, b = g;
      Coeff ap = it->lead[p], bp = t[p];
      while (bp != 0) {
        const Coeff k = floor_div(ap, bp);
        a = mul(a, power(b, -k));
        std::swap(a, b);
        ap = layer(a, e)[p];
        bp = layer(b, e)[p];
      }
      if (ap < 0) a = inv(a);
      it->g = a;
      it->lead = layer(a, e);
      spawn(it->g, e);
      g = std::move(b);
    }
  }
}

UniMatrix NormalClosure::sift(UniMatrix g, int degree) const {
  for (;;) {
    const int e = leading_degree(g);
    if (e == 0 || e >= degree) return g;
    const IntVector t = layer(g, e);
    const std::size_t p = first_nonzero(t);
    const Row* r = find(e, p);
    if (!r || t[p] % r->lead[p] != 0) return g;
    g = mul(g, power(r->g, -(t[p] / r->lead[p])));
  }
}

std::vector<IntVector> NormalClosure::leading_rows(int degree) const {
  std::vector<IntVector> out;
  if (degree < 1 || degree >= n_) return out;
  for (const Row& r : rows_[degree]) out.push_back(r.lead);
  return out;
}

std::size_t NormalClosure::num_elements() const {
  std::size_t n = 0;
  for (const auto& level : rows_) n += level.size();
  return n;
}

}  // namespace milnor
