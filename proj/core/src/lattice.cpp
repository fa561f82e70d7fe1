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

#include "milnor/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>

#include <algorithm>

namespace milnor {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigRow = std::vector<Big>;

struct Row {
  BigRow v;  // lattice coordinates
  BigRow c;  // combination of generators
};

Big floor_div(const Big& a, const Big& b) {
  Big q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void axpy(Row& r, const Big& f, const Row& p) {
  if (f == 0) return;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= f * p.v[i];
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= f * p.c[i];
}

bool nonzero(const BigRow& v) {
  return std::any_of(v.begin(), v.end(), [](const Big& x) { return x != 0; });
}

Coeff narrow(const Big& x) {
  if (x > std::numeric_limits<Coeff>::max() || x < std::numeric_limits<Coeff>::min())
    throw OverflowError();
  return static_cast<Coeff>(x);
}

IntVector narrow(const BigRow& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = narrow(v[i]);
  return r;
}

BigRow widen(const IntVector& v) { return BigRow(v.begin(), v.end()); }

}  // namespace

Lattice Lattice::span(std::size_t dim, const std::vector<IntVector>& generators, bool track) {
  Lattice L(dim);
  L.ngens_ = track ? generators.size() : 0;
  std::vector<Row> rows;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].size() != dim) throw Error("lattice generator has wrong dimension");
    Row r{widen(generators[k]), BigRow(L.ngens_, 0)};
    if (track) r.c[k] = 1;
    if (nonzero(r.v)) rows.push_back(std::move(r));
  }
  std::vector<Row> out;
  std::vector<std::size_t> piv;
  for (std::size_t col = 0; col < dim && !rows.empty(); ++col) {
    std::vector<Row> nz, rest;
    for (auto& r : rows) (r.v[col] != 0 ? nz : rest).push_back(std::move(r));
    if (nz.empty()) {
      rows = std::move(rest);
      continue;
    }
    // Euclid on the column until a single row carries it.
    while (nz.size() > 1) {
      auto it = std::min_element(nz.begin(), nz.end(), [col](const Row& a, const Row& b) {
        return abs(a.v[col]) < abs(b.v[col]);
      });
      std::iter_swap(nz.begin(), it);
      Row p = std::move(nz[0]);
      std::vector<Row> next;
      for (std::size_t i = 1; i < nz.size(); ++i) {
        Row r = std::move(nz[i]);
        axpy(r, r.v[col] / p.v[col], p);
        if (r.v[col] != 0)
          next.push_back(std::move(r));
        else if (nonzero(r.v))
          rest.push_back(std::move(r));
      }
      next.push_back(std::move(p));
      nz = std::move(next);
    }
    Row p = std::move(nz[0]);
    if (p.v[col] < 0) {
      for (auto& x : p.v) x = -x;
      for (auto& x : p.c) x = -x;
    }
    out.push_back(std::move(p));
    piv.push_back(col);
    rows = std::move(rest);
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k < i; ++k)
      axpy(out[k], floor_div(out[k].v[piv[i]], out[i].v[piv[i]]), out[i]);
  for (auto& r : out) {
    L.rows_.push_back(narrow(r.v));
    if (track) L.combo_.push_back(narrow(r.c));
  }
  L.piv_ = std::move(piv);
  return L;
}

IntVector Lattice::reduce(const IntVector& v) const {
  if (v.size() != dim_) throw Error("reduce: dimension mismatch");
  BigRow x = widen(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = piv_[i];
    Big f = floor_div(x[c], Big(rows_[i][c]));
    if (f == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) x[k] -= f * rows_[i][k];
  }
  return narrow(x);
}

bool Lattice::contains(const IntVector& v) const {
  IntVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Coeff x) { return x == 0; });
}

std::optional<IntVector> Lattice::express(const IntVector& v) const {
  if (v.size() != dim_) throw Error("express: dimension mismatch");
  if (combo_.size() != rows_.size()) throw Error("express: lattice built without tracking");
  BigRow x = widen(v);
  BigRow c(ngens_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t col = piv_[i];
    if (x[col] % rows_[i][col] != 0) return std::nullopt;
    Big f = x[col] / rows_[i][col];
    for (std::size_t k = 0; k < dim_; ++k) x[k] -= f * rows_[i][k];
    for (std::size_t k = 0; k < ngens_; ++k) c[k] += f * combo_[i][k];
  }
  if (nonzero(x)) return std::nullopt;
  return narrow(c);
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw Error("lattice_equal: dimension mismatch");
  return a == b;
}

std::vector<Coeff> elementary_divisors(const std::vector<IntVector>& rows_in) {
  std::vector<BigRow> a;
  for (const auto& r : rows_in) a.push_back(widen(r));
  std::vector<Coeff> out;
  if (a.empty()) return out;
  const std::size_t nr = a.size(), nc = a[0].size();
  std::size_t t = 0;
  while (t < nr && t < nc) {
    // Smallest nonzero entry of the remaining block as pivot.
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a[i][j] != 0 && (pi == nr || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == nr) break;
    std::swap(a[t], a[pi]);
    for (auto& r : a) std::swap(r[t], r[pj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < nr; ++i) {
      Big f = a[i][t] / a[t][t];
      if (f != 0)
        for (std::size_t j = t; j < nc; ++j) a[i][j] -= f * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < nc; ++j) {
      Big f = a[t][j] / a[t][t];
      if (f != 0)
        for (std::size_t i = t; i < nr; ++i) a[i][j] -= f * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility: fold any entry not divisible by the pivot into row t.
    bool divides = true;
    for (std::size_t i = t + 1; i < nr && divides; ++i)
      for (std::size_t j = t + 1; j < nc; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < nc; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    out.push_back(narrow(abs(a[t][t])));
    ++t;
  }
  return out;
}

}  // namespace milnor
