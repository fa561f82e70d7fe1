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

#include "milnor/words.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace milnor {

std::size_t int_pow(int q, int d) {
  if (q < 0 || d < 0) throw Error("int_pow: negative argument");
  std::size_t r = 1;
  for (int i = 0; i < d; ++i) {
    r *= static_cast<std::size_t>(q);
    if (r > (std::size_t{1} << 28)) throw Error(fmt::format("dimension {}^{} too large", q, d));
  }
  return r;
}

std::string word_to_string(const IndexWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return "(" + s + ")";
}

GroupWord reduce(const std::vector<Letter>& raw, int q) {
  std::vector<Letter> st;
  st.reserve(raw.size());
  for (const Letter& x : raw) {
    if (x.gen < 1 || (q > 0 && x.gen > q))
      throw Error(fmt::format("generator index {} out of range", x.gen));
    if (x.sign != 1 && x.sign != -1) throw Error("letter sign must be +1 or -1");
    if (!st.empty() && st.back().gen == x.gen && st.back().sign == -x.sign)
      st.pop_back();
    else
      st.push_back(x);
  }
  return GroupWord(st);
}

GroupWord::GroupWord(const std::vector<Letter>& letters) {
  // Single pass; the input may or may not be reduced already.
  for (const Letter& x : letters) {
    if (x.gen < 1) throw Error(fmt::format("generator index {} out of range", x.gen));
    if (!letters_.empty() && letters_.back().gen == x.gen && letters_.back().sign == -x.sign)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

GroupWord GroupWord::generator(int j, int sign) { return GroupWord({Letter{j, sign}}); }

int GroupWord::max_generator() const {
  int m = 0;
  for (const Letter& x : letters_) m = std::max(m, x.gen);
  return m;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> r(letters_.rbegin(), letters_.rend());
  for (Letter& x : r) x.sign = -x.sign;
  return GroupWord(r);
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<Letter> r = letters_;
  r.insert(r.end(), o.letters_.begin(), o.letters_.end());
  return GroupWord(r);
}

GroupWord GroupWord::pow(int e) const {
  GroupWord base = e >= 0 ? *this : inverse();
  GroupWord r;
  for (int i = 0; i < std::abs(e); ++i) r = r * base;
  return r;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += fmt::format("x{}", letters_[i].gen);
    if (letters_[i].sign < 0) s += "^-1";
  }
  return s;
}

GroupWord commutator(const GroupWord& g, const GroupWord& h) {
  return g * h * g.inverse() * h.inverse();
}

GroupWord left_collecting_word(const IndexWord& J) {
  if (J.size() < 2) throw Error("left_collecting_word needs at least two indices");
  GroupWord w = GroupWord::generator(J[0]);
  for (std::size_t i = 1; i < J.size(); ++i) w = commutator(w, GroupWord::generator(J[i]));
  return w;
}

Coeff fox_coefficient(const GroupWord& y, const IndexWord& I) {
  const std::size_t n = I.size();
  // a[k] is the coefficient of X_{i1}..X_{ik} in the expansion of the
  // prefix read so far.
  std::vector<Coeff> a(n + 1, 0);
  a[0] = 1;
  for (const Letter& x : y.letters()) {
    if (x.sign > 0) {
      for (std::size_t k = n; k >= 1; --k)
        if (I[k - 1] == x.gen) a[k] = checked_add(a[k], a[k - 1]);
    } else {
      // Right factor is 1 - X + X^2 - ...; runs of the letter at the end of
      // I[1..k] contribute with alternating sign.
      for (std::size_t k = n; k >= 1; --k) {
        Coeff acc = a[k];
        Coeff sg = -1;
        for (std::size_t t = k; t >= 1 && I[t - 1] == x.gen; --t) {
          acc = checked_add(acc, checked_mul(sg, a[t - 1]));
          sg = -sg;
        }
        a[k] = acc;
      }
    }
  }
  return a[n];
}

std::vector<Coeff> fox_coefficients(const GroupWord& y, int q, int d) {
  // Dense layers a[k] over all words of length k, updated letter by letter.
  std::vector<std::vector<Coeff>> a(d + 1);
  for (int k = 0; k <= d; ++k) a[k].assign(int_pow(q, k), 0);
  a[0][0] = 1;
  for (const Letter& x : y.letters()) {
    if (x.gen > q) throw Error(fmt::format("generator x{} exceeds q={}", x.gen, q));
    const std::size_t s = static_cast<std::size_t>(x.gen - 1);
    for (int k = d; k >= 1; --k) {
      std::vector<Coeff>& cur = a[k];
      const std::size_t sz = cur.size();
      for (std::size_t idx = 0; idx < sz; ++idx) {
        if (idx % q != s) continue;
        if (x.sign > 0) {
          cur[idx] = checked_add(cur[idx], a[k - 1][idx / q]);
        } else {
          Coeff acc = cur[idx];
          Coeff sg = -1;
          std::size_t pre = idx;
          for (int t = k; t >= 1; --t) {
            if (pre % q != s) break;
            pre /= q;
            acc = checked_add(acc, checked_mul(sg, a[t - 1][pre]));
            sg = -sg;
          }
          cur[idx] = acc;
        }
      }
    }
  }
  return a[d];
}

GroupWord substitute(const GroupWord& w, const std::map<int, GroupWord>& images) {
  GroupWord r;
  for (const Letter& x : w.letters()) {
    auto it = images.find(x.gen);
    if (it == images.end()) throw Error(fmt::format("substitute: no image for x{}", x.gen));
    r = r * (x.sign > 0 ? it->second : it->second.inverse());
  }
  return r;
}

GroupWord milnor_link_longitude(int m, int k) {
  if (m < 3) throw Error("milnor_link_longitude: need m >= 3");
  if (k < 1 || k > m) throw Error(fmt::format("milnor_link_longitude: k={} outside 1..{}", k, m));
  auto prefix = [](int upto) {
    // [[x1,x2],...,x_upto]; a single generator when upto == 1.
    GroupWord w = GroupWord::generator(1);
    for (int i = 2; i <= upto; ++i) w = commutator(w, GroupWord::generator(i));
    return w;
  };
  if (k == m) return prefix(m - 1);
  if (k == m - 1) return commutator(prefix(m - 2), GroupWord::generator(m));
  GroupWord b = GroupWord::generator(m);
  for (int i = m - 1; i >= k + 1; --i) b = commutator(b, GroupWord::generator(i, -1));
  // Empty left factor for k = 1: the longitude is b itself.
  if (k == 1) return b;
  return commutator(prefix(k - 1), b.inverse()).inverse();
}

}  // namespace milnor
