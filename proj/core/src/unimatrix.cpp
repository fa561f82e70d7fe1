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

#include "milnor/unimatrix.hpp"

#include <fmt/format.h>

#include "milnor/shuffle.hpp"

namespace milnor {

UniMatrix::UniMatrix(int q, int size) : q_(q), n_(size) {
  if (size < 1) throw Error("matrix size must be positive");
  e_.resize(static_cast<std::size_t>(size) * size);
  for (int i = 1; i <= size; ++i)
    for (int j = i + 1; j <= size; ++j) e_[slot(i, j)] = Tensor(q, i, j - i);
}

std::size_t UniMatrix::slot(int i, int j) const {
  return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
}

UniMatrix UniMatrix::identity(int q, int size) { return UniMatrix(q, size); }

UniMatrix UniMatrix::generator(int q, int j, int size) {
  UniMatrix m(q, size);
  for (int i = 1; i < size; ++i) m.e_[m.slot(i, i + 1)] = Tensor::letter(q, j, i);
  return m;
}

const Tensor& UniMatrix::entry(int i, int j) const {
  if (i < 1 || j > n_ || i >= j)
    throw Error(fmt::format("entry ({},{}) is not strictly upper in size {}", i, j, n_));
  return e_[slot(i, j)];
}

void UniMatrix::set_entry(int i, int j, Tensor t) {
  if (i < 1 || j > n_ || i >= j)
    throw Error(fmt::format("entry ({},{}) is not strictly upper in size {}", i, j, n_));
  if (t.q() != q_ || t.start_level() != i || t.degree() != j - i)
    throw Error(fmt::format("entry ({},{}) must have level {} and degree {}", i, j, i, j - i));
  e_[slot(i, j)] = std::move(t);
}

bool UniMatrix::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!entry(i, j).is_zero()) return false;
  return true;
}

bool UniMatrix::operator==(const UniMatrix& o) const {
  if (q_ != o.q_ || n_ != o.n_) return false;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!(entry(i, j) == o.entry(i, j))) return false;
  return true;
}

std::string UniMatrix::to_string() const {
  std::string s = fmt::format("size {}", n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!entry(i, j).is_zero()) s += fmt::format("\n  ({},{}): {}", i, j, entry(i, j).to_string());
  return s;
}

UniMatrix mul(const UniMatrix& a, const UniMatrix& b) {
  if (a.size() != b.size() || a.q() != b.q()) throw Error("mul: size mismatch");
  const int n = a.size(), q = a.q();
  UniMatrix c = UniMatrix::identity(q, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Coeff> out(int_pow(q, j - i), 0);
      auto acc = [&out](const Tensor& t) {
        const auto& r = t.raw();
        for (std::size_t k = 0; k < r.size(); ++k) out[k] = checked_add(out[k], r[k]);
      };
      acc(a.entry(i, j));
      acc(b.entry(i, j));
      for (int k = i + 1; k < j; ++k) accumulate_concat(out, a.entry(i, k), b.entry(k, j));
      c.set_entry(i, j, Tensor::from_dense(q, i, j - i, std::move(out)));
    }
  }
  return c;
}

UniMatrix inv(const UniMatrix& a) {
  // Back substitution on A X = I: X(i,j) = -A(i,j) - sum_k A(i,k) X(k,j).
  const int n = a.size(), q = a.q();
  UniMatrix x = UniMatrix::identity(q, n);
  for (int j = 2; j <= n; ++j) {
    for (int i = j - 1; i >= 1; --i) {
      std::vector<Coeff> out(int_pow(q, j - i), 0);
      const auto& r = a.entry(i, j).raw();
      for (std::size_t k = 0; k < r.size(); ++k) out[k] = r[k];
      for (int k = i + 1; k < j; ++k) accumulate_concat(out, a.entry(i, k), x.entry(k, j));
      for (Coeff& v : out) v = checked_sub(0, v);
      x.set_entry(i, j, Tensor::from_dense(q, i, j - i, std::move(out)));
    }
  }
  return x;
}

namespace {

/* t (x) lambda^{(g)} appended at the next level, added into out. */
void add_append(std::vector<Coeff>& out, const std::vector<Coeff>& t, int q, int g, Coeff sign) {
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k] != 0) {
      std::size_t idx = k * q + static_cast<std::size_t>(g - 1);
      out[idx] = checked_add(out[idx], checked_mul(sign, t[k]));
    }
}

}  // namespace

UniMatrix represent_word(const GroupWord& w, int q, int size) {
  if (w.max_generator() > q)
    throw Error(fmt::format("word uses x{} but q = {}", w.max_generator(), q));
  UniMatrix c = UniMatrix::identity(q, size);
  for (const Letter& x : w.letters()) {
    // Right multiplication by the generator or its inverse, row by row.
    // C' = C G:      C'(i,j) = C(i,j) + C(i,j-1) l^g
    // C' = C G^-1:   C'(i,j) = C(i,j) - C'(i,j-1) l^g
    UniMatrix d = c;
    for (int i = 1; i <= size; ++i) {
      for (int j = i + 1; j <= size; ++j) {
        std::vector<Coeff> out = c.entry(i, j).dense();
        std::vector<Coeff> prev;
        if (j - 1 == i)
          prev.assign(1, 1);
        else
          prev = (x.sign > 0 ? c : d).entry(i, j - 1).dense();
        add_append(out, prev, q, x.gen, x.sign > 0 ? 1 : -1);
        d.set_entry(i, j, Tensor::from_dense(q, i, j - i, std::move(out)));
      }
    }
    c = std::move(d);
  }
  return c;
}

UniMatrix truncate(const UniMatrix& a, int size) {
  if (size < 1 || size > a.size()) throw Error("truncate: bad size");
  UniMatrix r = UniMatrix::identity(a.q(), size);
  for (int i = 1; i <= size; ++i)
    for (int j = i + 1; j <= size; ++j) r.set_entry(i, j, a.entry(i, j));
  return r;
}

UniMatrix project(const UniMatrix& a) {
  if (a.size() < 2) throw Error("project: size must be at least 2");
  return truncate(a, a.size() - 1);
}

CentralPart central_part(const UniMatrix& a) {
  CentralPart r;
  const int n = a.size();
  for (int d = 1; d < n; ++d)
    for (int i = 1; i + d <= n; ++i) {
      int j = i + d;
      if (i == 1 && j == n) continue;
      if (!a.entry(i, j).is_zero()) {
        r.row = i;
        r.col = j;
        return r;
      }
    }
  r.central = true;
  r.value = n >= 2 ? a.entry(1, n) : Tensor(a.q(), 1, 0);
  return r;
}

UniMatrix section_lift(const UniMatrix& a) {
  const int n = a.size();
  UniMatrix r = UniMatrix::identity(a.q(), n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r.set_entry(i, j, a.entry(i, j));
  for (int i = 2; i <= n; ++i) r.set_entry(i, n + 1, shift(a.entry(i - 1, n), 1));
  return r;
}

UniMatrix conjugate(const UniMatrix& a, const UniMatrix& b, int eps) {
  if (eps != 1 && eps != -1) throw Error("conjugate: eps must be +1 or -1");
  UniMatrix bi = inv(b);
  return eps > 0 ? mul(mul(bi, a), b) : mul(mul(b, a), bi);
}

ImageCheck magnus_image_check(const UniMatrix& a) {
  const int n = a.size(), q = a.q();
  auto coef = [&](const IndexWord& I) -> Coeff {
    if (I.empty()) return 1;
    return a.entry(1, 1 + static_cast<int>(I.size())).at(I);
  };
  ImageCheck res;
  for (int total = 2; total <= n - 1; ++total) {
    for (int la = 1; la < total; ++la) {
      const int lb = total - la;
      Tensor ka(q, 1, la), kb(q, 1, lb);
      for (std::size_t x = 0; x < ka.dim(); ++x) {
        IndexWord J = ka.word_of(x);
        Coeff cj = coef(J);
        for (std::size_t y = 0; y < kb.dim(); ++y) {
          IndexWord K = kb.word_of(y);
          Coeff lhs = checked_mul(cj, coef(K));
          Coeff rhs = 0;
          for (const IndexWord& L : infiltration_shuffle(J, K)) rhs = checked_add(rhs, coef(L));
          if (lhs != rhs) {
            res.pass = false;
            res.J = J;
            res.K = K;
            return res;
          }
        }
      }
    }
  }
  return res;
}

}  // namespace milnor
