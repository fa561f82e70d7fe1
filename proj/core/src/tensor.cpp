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

#include "milnor/tensor.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace milnor {

Tensor::Tensor(int q, int start_level, int degree) : q_(q), start_(start_level), degree_(degree) {
  if (q < 1) throw Error("tensor alphabet size must be positive");
  if (start_level < 1) throw Error(fmt::format("tensor start level {} < 1", start_level));
  if (degree < 0) throw Error("negative tensor degree");
}

Tensor Tensor::unit(int q, int start_level) {
  Tensor t(q, start_level, 0);
  t.c_.assign(1, 1);
  return t;
}

Tensor Tensor::letter(int q, int j, int start_level) {
  if (j < 1 || j > q) throw Error(fmt::format("letter {} outside 1..{}", j, q));
  Tensor t(q, start_level, 1);
  t.c_.assign(q, 0);
  t.c_[j - 1] = 1;
  return t;
}

Tensor Tensor::from_pairs(int q, int start_level, int degree,
                          const std::vector<std::pair<IndexWord, Coeff>>& pairs) {
  Tensor t(q, start_level, degree);
  for (const auto& [w, v] : pairs) t.add_at(t.index_of(w), v);
  return t;
}

Tensor Tensor::from_dense(int q, int start_level, int degree, std::vector<Coeff> dense) {
  Tensor t(q, start_level, degree);
  if (dense.size() != t.dim()) throw Error("dense tensor size mismatch");
  t.c_ = std::move(dense);
  t.prune();
  return t;
}

std::size_t Tensor::dim() const { return int_pow(q_, degree_); }

void Tensor::prune() {
  if (std::all_of(c_.begin(), c_.end(), [](Coeff v) { return v == 0; })) c_.clear();
}

std::size_t Tensor::index_of(const IndexWord& w) const {
  if (static_cast<int>(w.size()) != degree_)
    throw Error(fmt::format("key {} has length {} but degree is {}", word_to_string(w), w.size(),
                            degree_));
  std::size_t idx = 0;
  for (int x : w) {
    if (x < 1 || x > q_) throw Error(fmt::format("key letter {} outside 1..{}", x, q_));
    idx = idx * q_ + static_cast<std::size_t>(x - 1);
  }
  return idx;
}

IndexWord Tensor::word_of(std::size_t index) const {
  IndexWord w(degree_);
  for (int i = degree_ - 1; i >= 0; --i) {
    w[i] = static_cast<int>(index % q_) + 1;
    index /= q_;
  }
  return w;
}

Coeff Tensor::at(const IndexWord& w) const { return at(index_of(w)); }

void Tensor::set(const IndexWord& w, Coeff v) {
  std::size_t idx = index_of(w);
  if (c_.empty()) {
    if (v == 0) return;
    c_.assign(dim(), 0);
  }
  c_[idx] = v;
  if (v == 0) prune();
}

void Tensor::add_at(std::size_t index, Coeff v) {
  if (v == 0) return;
  if (c_.empty()) c_.assign(dim(), 0);
  c_[index] = checked_add(c_[index], v);
  if (c_[index] == 0) prune();
}

std::vector<Coeff> Tensor::dense() const {
  if (c_.empty()) return std::vector<Coeff>(dim(), 0);
  return c_;
}

std::vector<std::pair<IndexWord, Coeff>> Tensor::pairs() const {
  std::vector<std::pair<IndexWord, Coeff>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(word_of(i), c_[i]);
  return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (!same_grade(o))
    throw Error(fmt::format("grade mismatch in add: ({},{}) vs ({},{})", start_, degree_,
                            o.start_, o.degree_));
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    c_ = o.c_;
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  prune();
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  *this += -o;
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor r = *this;
  for (Coeff& v : r.c_) v = checked_sub(0, v);
  return r;
}

bool Tensor::operator==(const Tensor& o) const {
  if (!same_grade(o)) return false;
  if (c_.empty() || o.c_.empty()) return c_.empty() && o.c_.empty();
  return c_ == o.c_;
}

std::string Tensor::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [w, v] : pairs()) {
    if (!first) s += ", ";
    first = false;
    for (int x : w) s += q_ < 10 ? std::to_string(x) : std::to_string(x) + ".";
    s += fmt::format(":{}", v);
  }
  return s + "}";
}

std::string Tensor::to_monomials() const {
  auto ps = pairs();
  if (ps.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, v] : ps) {
    if (first) {
      if (v < 0) s += "-";
    } else {
      s += v < 0 ? " - " : " + ";
    }
    first = false;
    Coeff a = v < 0 ? -v : v;
    if (a != 1 || w.empty()) s += std::to_string(a);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (a != 1 || i) s += " ";
      s += fmt::format("l{}^({})", start_ + static_cast<int>(i), w[i]);
    }
  }
  return s;
}

Tensor add(const Tensor& a, const Tensor& b) {
  Tensor r = a;
  r += b;
  return r;
}

Tensor sub(const Tensor& a, const Tensor& b) {
  Tensor r = a;
  r -= b;
  return r;
}

Tensor scale(const Tensor& a, Coeff k) {
  auto d = a.dense();
  for (Coeff& v : d) v = checked_mul(v, k);
  return Tensor::from_dense(a.q(), a.start_level(), a.degree(), std::move(d));
}

void accumulate_concat(std::vector<Coeff>& out, const Tensor& a, const Tensor& b) {
  const std::vector<Coeff>& da = a.raw();
  const std::vector<Coeff>& db = b.raw();
  if (da.empty() || db.empty()) return;
  const std::size_t nb = db.size();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] == 0) continue;
    Coeff* row = out.data() + i * nb;
    for (std::size_t j = 0; j < nb; ++j)
      if (db[j] != 0) row[j] = checked_add(row[j], checked_mul(da[i], db[j]));
  }
}

Tensor concat_mul(const Tensor& a, const Tensor& b) {
  if (a.q() != b.q()) throw Error("alphabet mismatch in concat_mul");
  if (b.start_level() != a.start_level() + a.degree())
    throw Error(fmt::format("concat_mul: intervals [{},{}) and [{},{}) are not adjacent",
                            a.start_level(), a.start_level() + a.degree(), b.start_level(),
                            b.start_level() + b.degree()));
  Tensor r(a.q(), a.start_level(), a.degree() + b.degree());
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<Coeff> out(r.dim(), 0);
  accumulate_concat(out, a, b);
  return Tensor::from_dense(a.q(), a.start_level(), r.degree(), std::move(out));
}

Tensor shift(const Tensor& a, int r) {
  if (a.start_level() + r < 1)
    throw Error(fmt::format("shift by {} takes level {} below 1", r, a.start_level()));
  return Tensor::from_dense(a.q(), a.start_level() + r, a.degree(), a.dense());
}

Tensor bracket(const Tensor& a, const Tensor& b) {
  if (a.q() != b.q()) throw Error("alphabet mismatch in bracket");
  const int q = a.q();
  const int da = a.degree(), db = b.degree();
  Tensor r(q, 1, da + db);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<Coeff> out(r.dim(), 0);
  const std::vector<Coeff> ca = a.dense();
  const std::vector<Coeff> cb = b.dense();
  for (std::size_t i = 0; i < na; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (cb[j] == 0) continue;
      Coeff p = checked_mul(ca[i], cb[j]);
      out[i * nb + j] = checked_add(out[i * nb + j], p);
      out[j * na + i] = checked_sub(out[j * na + i], p);
    }
  }
  return Tensor::from_dense(q, 1, da + db, std::move(out));
}

Tensor left_collecting_bracket(int q, const IndexWord& J) {
  if (J.size() < 2) throw Error("left_collecting_bracket needs at least two indices");
  Tensor t = Tensor::letter(q, J[0]);
  for (std::size_t i = 1; i < J.size(); ++i) t = bracket(t, Tensor::letter(q, J[i]));
  return t;
}

}  // namespace milnor
