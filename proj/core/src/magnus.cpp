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

#include "milnor/magnus.hpp"

namespace milnor {

NCSeries::NCSeries(int truncation) : m_(truncation) {
  if (truncation < 1) throw Error("series truncation must be positive");
}

NCSeries NCSeries::one(int truncation) {
  NCSeries s(truncation);
  s.add({}, 1);
  return s;
}

Coeff NCSeries::coeff(const IndexWord& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? 0 : it->second;
}

void NCSeries::add(const IndexWord& w, Coeff v) {
  if (static_cast<int>(w.size()) >= m_ || v == 0) return;
  Coeff& slot = t_[w];
  slot = checked_add(slot, v);
  if (slot == 0) t_.erase(w);
}

NCSeries series_mul(const NCSeries& a, const NCSeries& b) {
  if (a.truncation() != b.truncation()) throw Error("series truncation mismatch");
  NCSeries r(a.truncation());
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms()) {
      if (static_cast<int>(u.size() + v.size()) >= a.truncation()) continue;
      IndexWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, checked_mul(x, y));
    }
  return r;
}

NCSeries magnus_expand(const GroupWord& w, int truncation) {
  NCSeries r = NCSeries::one(truncation);
  for (const Letter& x : w.letters()) {
    NCSeries f = NCSeries::one(truncation);
    if (x.sign > 0) {
      f.add({x.gen}, 1);
    } else {
      IndexWord p;
      Coeff s = 1;
      for (int k = 1; k < truncation; ++k) {
        p.push_back(x.gen);
        s = -s;
        f.add(p, s);
      }
    }
    r = series_mul(r, f);
  }
  return r;
}

}  // namespace milnor
