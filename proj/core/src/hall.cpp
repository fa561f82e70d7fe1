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

#include "milnor/hall.hpp"

#include <fmt/format.h>

#include <mutex>

#include "milnor/lattice.hpp"

namespace milnor {

std::vector<IndexWord> lyndon_words(int q, int n) {
  std::vector<IndexWord> out;
  if (q < 1 || n < 1) return out;
  IndexWord w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == q) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::size_t necklace_count(int q, int n) {
  auto mobius = [](int d) {
    int r = 1;
    for (int p = 2; p * p <= d; ++p)
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        r = -r;
      }
    if (d > 1) r = -r;
    return r;
  };
  long long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += mobius(d) * static_cast<long long>(int_pow(q, n / d));
  return static_cast<std::size_t>(s / n);
}

bool is_lyndon(const IndexWord& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t i = 1; i < n; ++i) {
    IndexWord rot(w.begin() + i, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + i);
    if (!(w < rot)) return false;
  }
  return true;
}

std::pair<IndexWord, IndexWord> standard_factorization(const IndexWord& w) {
  if (w.size() < 2 || !is_lyndon(w)) throw Error("standard factorization needs a Lyndon word of length >= 2");
  for (std::size_t i = 1; i < w.size(); ++i) {
    IndexWord v(w.begin() + i, w.end());
    if (is_lyndon(v)) return {IndexWord(w.begin(), w.begin() + i), v};
  }
  throw InternalError("Lyndon word without a Lyndon suffix");
}

const Tensor& standard_bracketing(int q, const IndexWord& w) {
  static std::mutex mu;
  static std::map<std::pair<int, IndexWord>, Tensor> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, w});
    if (it != cache.end()) return it->second;
  }
  if (!is_lyndon(w)) throw Error(fmt::format("{} is not a Lyndon word", word_to_string(w)));
  Tensor t;
  if (w.size() == 1) {
    t = Tensor::letter(q, w[0]);
  } else {
    auto [u, v] = standard_factorization(w);
    t = bracket(standard_bracketing(q, u), standard_bracketing(q, v));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(q, w), std::move(t)).first->second;
}

GroupWord standard_bracket_word(const IndexWord& w) {
  if (w.size() == 1) return GroupWord::generator(w[0]);
  auto [u, v] = standard_factorization(w);
  return commutator(standard_bracket_word(u), standard_bracket_word(v));
}

Decomposition decompose(const Tensor& t) {
  Decomposition d;
  if (t.degree() == 0) {
    d.remainder = t;
    return d;
  }
  std::vector<Coeff> r = t.dense();
  for (const IndexWord& w : lyndon_words(t.q(), t.degree())) {
    const std::size_t idx = t.index_of(w);
    const Coeff c = r[idx];
    if (c == 0) continue;
    d.coeffs[w] = c;
    const auto& p = standard_bracketing(t.q(), w).raw();
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != 0) r[k] = checked_sub(r[k], checked_mul(c, p[k]));
  }
  d.remainder = Tensor::from_dense(t.q(), t.start_level(), t.degree(), std::move(r));
  return d;
}

std::vector<Coeff> lie_coordinates(const Tensor& t) {
  Decomposition d = decompose(t);
  if (!d.remainder.is_zero())
    throw Error(fmt::format("tensor is not a Lie element: remainder {}", d.remainder.to_string()));
  std::vector<Coeff> out;
  for (const IndexWord& w : lyndon_words(t.q(), t.degree())) {
    auto it = d.coeffs.find(w);
    out.push_back(it == d.coeffs.end() ? 0 : it->second);
  }
  return out;
}

Tensor from_lie_coordinates(int q, int degree, const std::vector<Coeff>& c) {
  auto ws = lyndon_words(q, degree);
  if (ws.size() != c.size()) throw Error("Lie coordinate vector has the wrong length");
  Tensor t(q, 1, degree);
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (c[i] != 0) t += scale(standard_bracketing(q, ws[i]), c[i]);
  return t;
}

std::optional<std::pair<IndexWord, Coeff>> match_left_collecting(const Tensor& t) {
  if (t.is_zero() || t.degree() < 2) return std::nullopt;
  // Find the first nonzero coefficient; a candidate must be proportional.
  const auto& raw = t.raw();
  std::size_t lead = 0;
  while (raw[lead] == 0) ++lead;
  Tensor keys(t.q(), 1, t.degree());
  for (std::size_t x = 0; x < keys.dim(); ++x) {
    IndexWord J = keys.word_of(x);
    if (J[0] == J[1]) continue;
    Tensor b = left_collecting_bracket(t.q(), J);
    Coeff bl = b.at(lead);
    if (bl == 0 || raw[lead] % bl != 0) continue;
    Coeff c = raw[lead] / bl;
    if (scale(b, c) == t) return std::make_pair(J, c);
  }
  return std::nullopt;
}

std::optional<std::vector<Coeff>> express_in(const Tensor& t, const std::vector<Tensor>& symbols) {
  std::vector<IntVector> gens;
  for (const Tensor& s : symbols) {
    if (!s.same_grade(t)) throw Error("express_in: grade mismatch");
    gens.push_back(s.dense());
  }
  Lattice L = Lattice::span(t.dim(), gens, true);
  return L.express(t.dense());
}

std::string left_collecting_string(const IndexWord& J) {
  std::string s = std::to_string(J[0]);
  for (std::size_t i = 1; i < J.size(); ++i) s = fmt::format("[{},{}]", s, J[i]);
  return s;
}

std::string describe(const Tensor& t) {
  if (t.is_zero()) return "0";
  if (auto m = match_left_collecting(t)) {
    auto [J, c] = *m;
    std::string b = left_collecting_string(J);
    if (c == 1) return b;
    if (c == -1) return "-" + b;
    return fmt::format("{} {}", c, b);
  }
  Decomposition d = decompose(t);
  if (!d.remainder.is_zero()) return t.to_string();
  std::string s;
  for (const auto& [w, c] : d.coeffs) {
    std::string name = "P" + word_to_string(w);
    if (s.empty())
      s += c == 1 ? name : c == -1 ? "-" + name : fmt::format("{} {}", c, name);
    else
      s += (c < 0 ? " - " : " + ") + (c == 1 || c == -1 ? name : fmt::format("{} {}", c < 0 ? -c : c, name));
  }
  return s;
}

}  // namespace milnor
