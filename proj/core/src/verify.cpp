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

#include "milnor/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "milnor/diagram.hpp"
#include "milnor/engine.hpp"
#include "milnor/hall.hpp"
#include "milnor/higher.hpp"
#include "milnor/magnus.hpp"
#include "milnor/quandle.hpp"
#include "milnor/shuffle.hpp"
#include "milnor/unimatrix.hpp"
#include "milnor/words.hpp"

namespace milnor {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}
  void add(std::string name, bool pass, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), pass, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

Tensor lc(int q, const IndexWord& J) { return left_collecting_bracket(q, J); }

// Component c + k on Z/3, components numbered 1..3.
int cyc(int c, int k) { return (c - 1 + k) % 3 + 1; }

Diagram load(const Catalog& cat, const std::string& name, const BuildOptions& o = {}) {
  return Diagram::build(cat.lookup(name).pd, o);
}

std::string show(const std::optional<InvariantResult>& r) {
  if (!r) return "trivial";
  std::string s = fmt::format("m={}", r->m);
  for (int c = 0; c < r->q; ++c) s += fmt::format(" psi({})={}", c + 1, describe(r->psi[c]));
  return s;
}

Tensor combine(const std::vector<Tensor>& basis, const std::vector<int>& c) {
  Tensor t(basis.front().q(), 1, basis.front().degree());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) t += scale(basis[i], c[i]);
  return t;
}

GroupWord random_word(std::mt19937& rng, int q, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, q), sg(0, 1);
  std::vector<Letter> ls;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sg(rng) ? 1 : -1});
  return GroupWord(ls);
}

IndexWord random_index(std::mt19937& rng, int q, int n) {
  std::uniform_int_distribution<int> gen(1, q);
  IndexWord J(n);
  for (int& x : J) x = gen(rng);
  return J;
}

Tensor random_tensor(std::mt19937& rng, int q, int start, int degree) {
  std::uniform_int_distribution<int> v(-3, 3);
  Tensor t(q, start, degree);
  for (std::size_t i = 0; i < t.dim(); ++i) t.add_at(i, v(rng));
  return t;
}

// ---------------------------------------------------------------- whitehead

std::vector<CheckResult> suite_whitehead(const Catalog& cat) {
  Recorder rec("whitehead");
  auto t0 = Clock::now();
  Diagram d = load(cat, "5_1^2");
  auto r = first_nonvanishing(d, 8);
  const double secs = since(t0);
  const Tensor expected =
      Tensor::from_pairs(2, 1, 4, {{{2, 2, 1, 1}, 1}, {{2, 1, 2, 1}, -2}, {{1, 2, 1, 2}, 2}, {{1, 1, 2, 2}, -1}});
  rec.add("m = 4", r && r->m == 4, show(r));
  rec.add("psi(1) = {2211:1, 2121:-2, 1212:2, 1122:-1}", r && r->psi[0] == expected,
          r ? r->psi[0].to_string() : "");
  rec.add("psi(2) = -psi(1)", r && r->psi[1] == -expected, r ? r->psi[1].to_string() : "");
  rec.add("expansion equals [[[l1^(1),l2^(2)],l3^(1)],l4^(2)]", lc(2, {1, 2, 1, 2}) == expected,
          lc(2, {1, 2, 1, 2}).to_string());
  rec.add("runtime < 10 s", secs < 10.0, fmt::format("{:.3f} s", secs));
  return rec.take();
}

// ------------------------------------------------------------------- table1

struct Table1Row {
  const char* name;
  int m;
  int multiple;
};

constexpr std::array<Table1Row, 8> kTable1{{{"5_1^2", 4, 1},
                                            {"7_4^2", 4, 2},
                                            {"7_6^2", 4, 1},
                                            {"7_8^2", 4, 1},
                                            {"8_10^2", 6, 1},
                                            {"8_12^2", 6, 1},
                                            {"8_13^2", 4, 1},
                                            {"8_15^2", 4, 1}}};

std::vector<CheckResult> suite_table1(const Catalog& cat) {
  Recorder rec("table1");
  const Tensor Y = lc(2, {1, 2, 1, 2});
  const Tensor L = lc(2, {1, 2, 1, 1, 1, 2});
  for (const Table1Row& row : kTable1) {
    auto t0 = Clock::now();
    auto r = first_nonvanishing(load(cat, row.name), 8);
    const double secs = since(t0);
    const Tensor& base = row.m == 4 ? Y : L;
    const bool ok = r && r->m == row.m && r->psi[0] == scale(base, row.multiple) &&
                    r->psi[1] == scale(base, -row.multiple);
    rec.add(fmt::format("{}: m = {}, psi = +-{}{}", row.name, row.m,
                        row.multiple == 1 ? "" : std::to_string(row.multiple) + " ",
                        row.m == 4 ? "Y" : "L"),
            ok && secs < 60.0, fmt::format("{}; {:.3f} s", show(r), secs));
  }
  return rec.take();
}

// ---------------------------------------------------------------- borromean

std::vector<CheckResult> suite_borromean(const Catalog& cat) {
  Recorder rec("borromean");
  auto t0 = Clock::now();
  Diagram d = load(cat, "6_2^3");
  auto r = first_nonvanishing(d, 8);
  rec.add("m = 3", r && r->m == 3, show(r));
  if (r && r->m == 3) {
    // The component is the last letter of the displayed bracket.
    for (int c = 1; c <= 3; ++c) {
      const Tensor want = lc(3, {cyc(c, 1), cyc(c, 2), c});
      rec.add(fmt::format("psi({}) = [[l1^({}),l2^({})],l3^({})]", c, cyc(c, 1), cyc(c, 2), c),
              r->psi[c - 1] == want, r->psi[c - 1].to_string());
    }
  }
  auto led = higher_mu(d, 5);
  if (!led || led->m != 3) {
    rec.add("ledger starts at degree 3", false);
    return rec.take();
  }
  std::vector<Tensor> gens;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) gens.push_back(lc(3, {j, cyc(j, 1), cyc(j, 2), k}));
  const DeltaLattice want4 = delta_span(3, 4, gens);
  const DeltaSummary s4 = summarize(led->at(4).delta);
  rec.add("Delta_4 equals the span of [[[l1^(j),l2^(j+1)],l3^(j+2)],l4^(k)]",
          lattice_equal(led->at(4).delta, want4),
          fmt::format("rank {} vs {}", led->at(4).delta.hnf.rank(), want4.hnf.rank()));
  (void)s4;
  for (int c = 1; c <= 3; ++c) {
    const Tensor w4 = lc(3, {cyc(c, 1), cyc(c, 2), cyc(c, 2), c});
    const Tensor w5 = lc(3, {cyc(c, 1), cyc(c, 2), cyc(c, 2), cyc(c, 2), c});
    rec.add(fmt::format("mu4({}) = {} mod Delta_4", c, left_collecting_string({cyc(c, 1), cyc(c, 2), cyc(c, 2), c})),
            congruent(led->at(4).raw[c - 1], w4, led->at(4).delta),
            reduce(sub(led->at(4).raw[c - 1], w4), led->at(4).delta).to_string());
    rec.add(fmt::format("mu5({}) = {} mod Delta_5", c,
                        left_collecting_string({cyc(c, 1), cyc(c, 2), cyc(c, 2), cyc(c, 2), c})),
            congruent(led->at(5).raw[c - 1], w5, led->at(5).delta),
            reduce(sub(led->at(5).raw[c - 1], w5), led->at(5).delta).to_string());
  }
  const double secs = since(t0);
  rec.add("runtime < 120 s", secs < 120.0, fmt::format("{:.3f} s", secs));
  return rec.take();
}

// ---------------------------------------------------------------------- lk3

struct Lk3Row {
  const char* name;
  std::vector<int> mu4;                 // over b1, b2, b3
  std::vector<std::vector<int>> delta;  // over A..F, besides 3 * everything
  std::vector<int> mu5_1, mu5_2;
};

const std::vector<Lk3Row>& lk3_rows() {
  static const std::vector<Lk3Row> rows = {
      {"6_1^2", {2, 1, 1}, {{0, 1, 0, 1, 0, -1}, {1, 0, 1, 0, 1, 0}}, {-1, 0, -1, 0, 0, 0}, {-1, 0, 1, 1, 0, 0}},
      {"6_2^2", {2, 1, 0}, {{0, 1, 0, 0, -1, 0}, {1, 0, -1, 0, 0, 0}}, {0, 0, 0, 1, 0, -1}, {0, 1, 0, 0, 0, -1}},
      {"8_a10^2", {2, 1, -1}, {{0, 1, 0, -1, 0, 1}, {1, 0, -1, 0, -1, 0}}, {0, 0, 1, 0, 0, 0}, {0, 0, -1, 0, 0, 0}},
      {"8_a11^2", {2, -1, 1}, {{0, 1, 0, 1, 0, -1}, {1, 0, 1, 0, 1, 0}}, {0, 0, -1, 0, 0, 0}, {0, 0, 1, 0, 0, 0}},
      {"9_a23^2", {2, 1, 1}, {{0, 1, 0, 1, 0, -1}, {1, 0, 1, 0, 1, 0}}, {-1, 1, 0, 1, 0, 0}, {-1, 0, 1, -1, 0, 0}},
      {"9_a28^2", {2, 1, 0}, {{0, 1, 0, 0, -1, 0}, {1, 0, -1, 0, 0, 0}}, {0, 0, 0, -1, 0, -1}, {0, -1, 0, -1, 0, -1}},
      {"9_a32^2", {2, 1, 1}, {{0, 1, 0, 1, 0, -1}, {1, 0, 1, 0, 1, 0}}, {-1, 0, 1, 0, 0, 0}, {1, 0, -1, 0, 0, 0}},
      {"9_a33^2", {2, 1, -1}, {{0, 1, 0, -1, 0, 1}, {1, 0, -1, 0, -1, 0}}, {-1, 1, 1, 0, 0, 0}, {-1, 1, 1, 0, 0, 0}},
      {"9_n15^2", {2, 1, 1}, {{0, 1, 0, 1, 0, -1}, {1, 0, 1, 0, 1, 0}}, {-1, 0, -1, 1, 0, 0}, {-1, 0, 1, -1, 0, 0}},
      {"9_n16^2", {2, 1, 1}, {{0, 1, 0, 1, 0, -1}, {1, 0, 1, 0, 1, 0}}, {-1, 0, -1, 1, 0, 0}, {0, 1, -1, 1, 0, 0}},
  };
  return rows;
}

std::string combo_text(const std::vector<int>& c, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::string term = std::abs(c[i]) == 1 ? names[i] : fmt::format("{}{}", std::abs(c[i]), names[i]);
    if (s.empty())
      s = c[i] < 0 ? "-" + term : term;
    else
      s += (c[i] < 0 ? "-" : "+") + term;
  }
  return s.empty() ? "0" : s;
}

std::vector<Tensor> b_symbols() {
  return {lc(2, {1, 2, 2, 2}), lc(2, {2, 1, 1, 1}), lc(2, {1, 2, 2, 1})};
}

std::vector<Tensor> af_symbols() {
  return {lc(2, {1, 2, 2, 2, 2}), lc(2, {1, 2, 2, 2, 1}), lc(2, {2, 1, 1, 1, 2}),
          lc(2, {2, 1, 1, 1, 1}), lc(2, {2, 1, 1, 2, 2}), lc(2, {1, 2, 2, 1, 1})};
}

/* <3, g1, g2>: three times every Lie element of degree 5 plus the listed
 * combinations. */
DeltaLattice lk3_delta(const std::vector<std::vector<int>>& extra) {
  std::vector<Tensor> gens;
  for (const IndexWord& w : lyndon_words(2, 5)) gens.push_back(scale(standard_bracketing(2, w), 3));
  const auto af = af_symbols();
  for (const auto& c : extra) gens.push_back(combine(af, c));
  return delta_span(2, 5, gens);
}

void lk3_link(Recorder& rec, const Catalog& cat, const Lk3Row& row) {
  static const std::vector<std::string> bn{"b1", "b2", "b3"}, an{"A", "B", "C", "D", "E", "F"};
  auto t0 = Clock::now();
  Diagram d = load(cat, row.name);
  auto led = higher_mu(d, 5);
  const double secs = since(t0);
  const std::string n = row.name;
  const int lk = linking_matrix(d)[0][1];
  rec.add(n + ": lk = 3, m = 2", lk == 3 && led && led->m == 2,
          fmt::format("lk = {}, m = {}", lk, led ? led->m : 0));
  if (!led || led->m != 2) return;
  const LedgerEntry &e3 = led->at(3), &e4 = led->at(4), &e5 = led->at(5);
  rec.add(n + ": mu3 = 0 mod Delta_3", e3.reduced[0].is_zero() && e3.reduced[1].is_zero(),
          fmt::format("{} | {}", e3.reduced[0].to_string(), e3.reduced[1].to_string()));
  const Tensor w4 = combine(b_symbols(), row.mu4);
  for (int j = 0; j < 2; ++j)
    rec.add(fmt::format("{}: mu4({}) = {} mod Delta_4", n, j + 1, combo_text(row.mu4, bn)),
            congruent(e4.raw[j], w4, e4.delta), reduce(sub(e4.raw[j], w4), e4.delta).to_string());
  const DeltaLattice want = lk3_delta(row.delta);
  rec.add(fmt::format("{}: Delta_5 = <3, {}, {}>", n, combo_text(row.delta[0], an), combo_text(row.delta[1], an)),
          lattice_equal(e5.delta, want),
          fmt::format("computed rank {}, torsion [{}]", e5.delta.hnf.rank(),
                      fmt::join(summarize(e5.delta).torsion, ",")));
  const std::vector<int>* mu5[2] = {&row.mu5_1, &row.mu5_2};
  for (int j = 0; j < 2; ++j) {
    const Tensor w5 = combine(af_symbols(), *mu5[j]);
    rec.add(fmt::format("{}: mu5({}) = {} mod Delta_5", n, j + 1, combo_text(*mu5[j], an)),
            congruent(e5.raw[j], w5, e5.delta), reduce(sub(e5.raw[j], w5), e5.delta).to_string());
  }
  rec.add(n + ": runtime < 300 s", secs < 300.0, fmt::format("{:.3f} s", secs));
}

std::vector<CheckResult> suite_lk3(const Catalog& cat) {
  Recorder rec("lk3");
  for (const Lk3Row& row : lk3_rows()) lk3_link(rec, cat, row);
  return rec.take();
}

// ------------------------------------------------------------ first-example

std::vector<CheckResult> suite_first_example(const Catalog& cat) {
  Recorder rec("first-example");
  const Tensor X = lc(2, {2, 1, 1, 1, 2});
  std::optional<std::vector<Tensor>> ref;
  for (const char* name : {"5_1^2", "7_6^2", "7_8^2", "8_13^2"}) {
    auto led = higher_mu(load(cat, name), 7);
    if (!led || led->m != 4) {
      rec.add(fmt::format("{}: m = 4", name), false, led ? fmt::format("m = {}", led->m) : "trivial");
      continue;
    }
    const auto& psi = led->at(4).raw;
    if (!ref) ref = psi;
    rec.add(fmt::format("{}: psi_4 equals that of 5_1^2", name), psi == *ref,
            fmt::format("{} | {}", psi[0].to_string(), psi[1].to_string()));
    const LedgerEntry& e5 = led->at(5);
    for (int j = 0; j < 2; ++j) {
      const bool plus = congruent(e5.raw[j], X, e5.delta);
      const bool minus = congruent(e5.raw[j], -X, e5.delta);
      rec.add(fmt::format("{}: mu5({}) = +-[[[[l1^(2),l2^(1)],l3^(1)],l4^(1)],l5^(2)] mod Delta_5", name, j + 1),
              plus || minus,
              plus ? (minus ? "both signs (2X in Delta)" : "sign +") : minus ? "sign -" : reduce(e5.raw[j], e5.delta).to_string());
    }
    for (int h : {6, 7}) {
      const LedgerEntry& e = led->at(h);
      rec.add(fmt::format("{}: mu{} = 0 mod Delta_{}", name, h, h),
              e.reduced[0].is_zero() && e.reduced[1].is_zero(),
              fmt::format("{} | {}", e.reduced[0].to_string(), e.reduced[1].to_string()));
    }
  }
  return rec.take();
}

// ------------------------------------------------------------- milnor-links

/* [(), X] = X and [X, ()] = -X for the empty bracket. */
Tensor closed_form(int m, int k) {
  IndexWord a, b;
  for (int i = 1; i <= k - 1; ++i) a.push_back(i);
  for (int i = m; i >= k + 1; --i) b.push_back(i);
  auto side = [m](const IndexWord& J) { return J.size() == 1 ? Tensor::letter(m, J[0]) : lc(m, J); };
  Tensor t;
  if (a.empty())
    t = side(b);
  else if (b.empty())
    t = -side(a);
  else
    t = bracket(side(a), side(b));
  return (m - k + 1) % 2 == 0 ? t : -t;
}

std::vector<CheckResult> suite_milnor_links(const Catalog&) {
  Recorder rec("milnor-links");
  auto t0 = Clock::now();
  for (int m = 3; m <= 7; ++m) {
    std::vector<int> bad;
    for (int k = 1; k <= m; ++k) {
      UniMatrix M = represent_word(milnor_link_longitude(m, k), m, m);
      if (!(M.top_right() == closed_form(m, k))) bad.push_back(k);
    }
    rec.add(fmt::format("m = {}: longitudes k = 1..{} match the closed form", m, m), bad.empty(),
            bad.empty() ? "" : fmt::format("mismatch at k = {}", fmt::join(bad, ",")));
  }
  const double secs = since(t0);
  rec.add("runtime < 60 s", secs < 60.0, fmt::format("{:.3f} s", secs));
  return rec.take();
}

// ------------------------------------------------------------------ oracles

std::vector<CheckResult> suite_oracles(const Catalog& cat) {
  Recorder rec("oracles");
  std::vector<std::string> unbuilt;
  for (const CatalogEntry& e : cat.entries()) {
    try {
      Diagram::build(e.pd);
    } catch (const Error& ex) {
      unbuilt.push_back(e.name + ": " + ex.what());
    }
  }
  rec.add("every catalog diagram builds", unbuilt.empty(), fmt::format("{}", fmt::join(unbuilt, "; ")));

  // Linking numbers against the degree-2 longitude classes.
  for (const char* name : {"2_1^2", "4_1^2", "6_1^2", "6_2^2"}) {
    Diagram d = load(cat, name);
    auto r = first_nonvanishing(d, 3);
    auto lk = linking_matrix(d);
    bool ok = r && r->m == 2;
    for (int j = 0; ok && j < r->q; ++j)
      for (int k = 0; k < r->q; ++k)
        if (k != j && r->longitude[j].at(IndexWord{k + 1}) != lk[j][k]) ok = false;
    rec.add(fmt::format("{}: longitude coefficients equal linking numbers", name), ok,
            fmt::format("lk = {}, {}", lk[0][1], show(r)));
  }

  // Cocycle sum, image test and Wirtinger relations at the first obstruction.
  for (const CatalogEntry& e : cat.entries()) {
    Diagram d = Diagram::build(e.pd);
    if (d.num_crossings() == 0) continue;
    ArcAssignment a = base_assignment(d);
    bool found = false, ok = true, image = true;
    std::string detail;
    while (a.level <= 6) {
      LevelStep s = step_level(d, a);
      bool nonzero = false;
      for (const UniMatrix& D : s.defects) nonzero = nonzero || !D.is_identity();
      for (const UniMatrix& A : a.arcs) image = image && magnus_image_check(A).pass;
      if (nonzero) {
        found = true;
        for (int j = 0; j < d.num_components(); ++j) {
          Tensor p = psi(d, a, j), c = cocycle_sum(d, a, j);
          if (!(p == c)) {
            ok = false;
            detail = fmt::format("component {}: psi {} vs phi {}", j + 1, p.to_string(), c.to_string());
          }
        }
        break;
      }
      a = lift(d, a);
    }
    if (!found) continue;
    rec.add(fmt::format("{}: Phi = Psi at level {}", e.name, a.level), ok, detail);
    rec.add(fmt::format("{}: arc matrices lie in the image", e.name), image);
  }
  return rec.take();
}

// --------------------------------------------------------------- properties

template <class F>
void property(Recorder& rec, const std::string& name, int cases, F&& body) {
  int failed = 0;
  std::string first;
  for (int i = 0; i < cases; ++i) {
    std::string why = body(i);
    if (!why.empty()) {
      if (failed++ == 0) first = fmt::format("case {}: {}", i, why);
    }
  }
  rec.add(fmt::format("{} ({} cases)", name, cases), failed == 0,
          failed ? fmt::format("{} failed; {}", failed, first) : "");
}

std::vector<CheckResult> suite_properties(const Catalog& cat) {
  Recorder rec("properties");
  constexpr int N = 100;

  {
    std::mt19937 rng(1001);
    property(rec, "infiltration shuffle relation", N, [&](int) -> std::string {
      const int q = 2 + static_cast<int>(rng() % 2);
      GroupWord y = random_word(rng, q, 14);
      ImageCheck c = magnus_image_check(represent_word(y, q, q == 2 ? 7 : 6));
      return c.pass ? "" : fmt::format("{}: J={} K={}", y.to_string(), word_to_string(c.J), word_to_string(c.K));
    });
  }
  {
    std::mt19937 rng(1002);
    property(rec, "Fox, Magnus and matrix coefficients agree", N, [&](int) -> std::string {
      const int q = 2 + static_cast<int>(rng() % 2);
      GroupWord y = random_word(rng, q, 12);
      UniMatrix M = represent_word(y, q, 6);
      NCSeries S = magnus_expand(y, 6);
      for (int deg = 1; deg <= 5; ++deg) {
        std::vector<Coeff> fox = fox_coefficients(y, q, deg);
        std::vector<Coeff> mat = M.entry(1, 1 + deg).dense();
        Tensor shape(q, 1, deg);
        for (std::size_t i = 0; i < fox.size(); ++i) {
          IndexWord w = shape.word_of(i);
          if (fox[i] != mat[i] || fox[i] != S.coeff(w) || fox[i] != fox_coefficient(y, w))
            return fmt::format("{} at {}", y.to_string(), word_to_string(w));
        }
      }
      return "";
    });
  }
  {
    std::mt19937 rng(1003);
    property(rec, "commutator image equals bracket", N, [&](int) -> std::string {
      const int q = 2 + static_cast<int>(rng() % 2);
      const int a = 1 + static_cast<int>(rng() % 3);
      const int b = 1 + static_cast<int>(rng() % (6 - a));
      // Each side is a product of two degree-deg commutators or letters.
      auto element = [&](int deg, GroupWord& w, Tensor& t) {
        for (int r = 0; r < 2; ++r) {
          const int e = rng() % 2 ? 1 : -1;
          IndexWord J = random_index(rng, q, deg);
          if (deg == 1) {
            w = w * GroupWord::generator(J[0], e);
            t += scale(Tensor::letter(q, J[0]), e);
          } else {
            w = w * left_collecting_word(J).pow(e);
            t += scale(lc(q, J), e);
          }
        }
      };
      GroupWord g, h;
      Tensor tg(q, 1, a), th(q, 1, b);
      element(a, g, tg);
      element(b, h, th);
      Tensor got = represent_word(commutator(g, h), q, a + b + 1).top_right();
      Tensor want = bracket(tg, th);
      return got == want ? "" : fmt::format("[{}, {}]", g.to_string(), h.to_string());
    });
  }
  {
    std::mt19937 rng(1004);
    property(rec, "left-collecting commutator image, |J| <= 6", N, [&](int) -> std::string {
      const int q = 2 + static_cast<int>(rng() % 2);
      const int n = 2 + static_cast<int>(rng() % 5);
      IndexWord J = random_index(rng, q, n);
      UniMatrix M = represent_word(left_collecting_word(J), q, n + 1);
      CentralPart c = central_part(M);
      return c.central && c.value == lc(q, J) ? "" : word_to_string(J);
    });
  }
  {
    std::mt19937 rng(1005);
    property(rec, "conjugation ignores the top-right entry of the conjugator", N, [&](int) -> std::string {
      const int q = 2 + static_cast<int>(rng() % 2);
      const int n = 3 + static_cast<int>(rng() % 3);
      UniMatrix A = represent_word(random_word(rng, q, 10), q, n);
      UniMatrix B = represent_word(random_word(rng, q, 10), q, n);
      UniMatrix B2 = B;
      B2.set_entry(1, n, add(B.top_right(), random_tensor(rng, q, 1, n - 1)));
      for (int eps : {1, -1})
        if (!(conjugate(A, B, eps) == conjugate(A, B2, eps))) return fmt::format("eps {}", eps);
      return "";
    });
  }

  // Links with a first obstruction at small degree, in catalog order.
  std::vector<std::pair<std::string, int>> nontrivial;
  for (const CatalogEntry& e : cat.entries()) {
    Diagram d = Diagram::build(e.pd);
    if (d.num_components() < 2 || d.num_crossings() == 0) continue;
    auto r = first_nonvanishing(d, 6);
    if (r) nontrivial.emplace_back(e.name, r->m);
  }
  {
    std::mt19937 rng(1006);
    std::map<std::string, std::pair<Diagram, ArcAssignment>> cache;
    property(rec, "Phi = Psi under reordered crossings", N, [&](int i) -> std::string {
      const auto& [name, m] = nontrivial[i % nontrivial.size()];
      auto it = cache.find(name);
      if (it == cache.end()) {
        Diagram d = load(cat, name);
        ArcAssignment a = base_assignment(d);
        while (a.level < m) a = lift(d, a);
        it = cache.emplace(name, std::make_pair(d, a)).first;
      }
      const auto& [d, a] = it->second;
      for (int j = 0; j < d.num_components(); ++j) {
        std::vector<std::size_t> order(d.walk(j).size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::shuffle(order.begin(), order.end(), rng);
        if (!(cocycle_sum(d, a, j, order) == psi(d, a, j))) return fmt::format("{} component {}", name, j + 1);
      }
      return "";
    });
  }
  {
    std::mt19937 rng(1007);
    property(rec, "lift refused exactly at the first nonzero defect", N, [&](int i) -> std::string {
      const auto& [name, m] = nontrivial[i % nontrivial.size()];
      if (m > 4 && i >= static_cast<int>(nontrivial.size())) return "";
      BuildOptions o;
      Diagram d0 = load(cat, name);
      for (int j = 0; j < d0.num_components(); ++j)
        o.base_shift.push_back(static_cast<int>(rng() % std::max<std::size_t>(1, d0.component_arcs(j).size())));
      Diagram d = load(cat, name, o);
      ArcAssignment a = base_assignment(d);
      try {
        while (a.level < m) a = lift(d, a);
      } catch (const LiftRefused& e) {
        return fmt::format("{}: refused early at level {}", name, e.level);
      }
      try {
        lift(d, a);
      } catch (const LiftRefused& e) {
        return e.level == m ? "" : fmt::format("{}: refused at level {}", name, e.level);
      }
      return fmt::format("{}: lifted past level {}", name, m);
    });
  }
  {
    // Bundled links with lk in {2, 3}, with random base arcs.
    std::vector<std::string> names;
    for (const CatalogEntry& e : cat.entries()) {
      Diagram d = Diagram::build(e.pd);
      if (d.num_components() != 2) continue;
      const int lk = std::abs(linking_matrix(d)[0][1]);
      if (lk == 2 || lk == 3) names.push_back(e.name);
    }
    std::mt19937 rng(1008);
    std::vector<std::string> fails;
    int cases = 0;
    for (const std::string& name : names) {
      for (int rep = 0; rep < 3; ++rep) {
        BuildOptions o;
        Diagram d0 = load(cat, name);
        if (rep > 0)
          for (int j = 0; j < 2; ++j)
            o.base_shift.push_back(static_cast<int>(rng() % d0.component_arcs(j).size()));
        Diagram d = load(cat, name, o);
        const int lk = linking_matrix(d)[0][1];
        auto led = higher_mu(d, 5);
        if (!led) {
          fails.push_back(name + ": trivial");
          continue;
        }
        for (const LedgerEntry& e : led->entries) {
          if (e.degree <= 2) continue;
          for (int j = 0; j < 2; ++j) {
            ++cases;
            if (!reduce(scale(e.raw[j], lk), e.delta).is_zero())
              fails.push_back(fmt::format("{} degree {} component {}", name, e.degree, j + 1));
          }
        }
      }
    }
    rec.add(fmt::format("lk annihilates refined values ({} cases)", cases), fails.empty() && cases >= N,
            fmt::format("{}", fmt::join(fails, "; ")));
  }
  {
    std::vector<std::string> bad;
    for (int q = 1; q <= 3; ++q)
      for (int n = 1; n <= 6; ++n) {
        auto ws = lyndon_words(q, n);
        std::vector<IntVector> rows;
        for (const IndexWord& w : ws) rows.push_back(standard_bracketing(q, w).dense());
        const std::size_t rank = Lattice::span(int_pow(q, n), rows).rank();
        if (ws.size() != necklace_count(q, n) || rank != ws.size())
          bad.push_back(fmt::format("q={} n={}", q, n));
      }
    rec.add("Lyndon rank equals necklace count, n <= 6, q <= 3", bad.empty(), fmt::format("{}", fmt::join(bad, ", ")));
  }
  {
    std::mt19937 rng(1009);
    property(rec, "random Lie elements decompose exactly", N, [&](int) -> std::string {
      const int q = 2 + static_cast<int>(rng() % 2);
      const int n = 2 + static_cast<int>(rng() % 4);
      auto ws = lyndon_words(q, n);
      std::vector<Coeff> c(ws.size());
      for (Coeff& x : c) x = static_cast<Coeff>(rng() % 9) - 4;
      Tensor t = from_lie_coordinates(q, n, c);
      return lie_coordinates(t) == c ? "" : fmt::format("q={} n={}", q, n);
    });
  }
  {
    std::mt19937 rng(1010);
    const std::vector<std::pair<std::string, std::string>> pairs{{"5_1^2", "5_1^2-v2"}, {"8_10^2", "8_10^2-v2"}};
    std::map<std::string, InvariantResult> ref;
    for (const auto& [a, b] : pairs) ref.emplace(a, *first_nonvanishing(load(cat, a), 8));
    property(rec, "diagram independence on Reidemeister variants", N, [&](int i) -> std::string {
      // Mostly the cheap degree-4 pair; every tenth case uses the degree-6 pair.
      const auto& [a, b] = pairs[i % 10 == 9 ? 1 : 0];
      const std::string& name = (i % 2) ? b : a;
      Diagram d0 = load(cat, name);
      BuildOptions o;
      for (int j = 0; j < 2; ++j) o.base_shift.push_back(static_cast<int>(rng() % d0.component_arcs(j).size()));
      auto r = first_nonvanishing(load(cat, name, o), 8);
      const InvariantResult& want = ref.at(a);
      return r && r->m == want.m && r->psi == want.psi ? "" : fmt::format("{}: {}", name, show(r));
    });
  }
  return rec.take();
}

using SuiteFn = std::vector<CheckResult> (*)(const Catalog&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"whitehead", suite_whitehead},     {"table1", suite_table1},
      {"borromean", suite_borromean},     {"lk3", suite_lk3},
      {"first-example", suite_first_example}, {"milnor-links", suite_milnor_links},
      {"oracles", suite_oracles},         {"properties", suite_properties},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const Catalog& catalog) {
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& [n, f] : registry()) {
      auto r = f(catalog);
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }
  for (const auto& [n, f] : registry())
    if (n == suite) return f(catalog);
  throw ParseError(fmt::format("unknown suite '{}'", suite));
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace milnor
