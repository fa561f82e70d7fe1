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
 // Refined invariants past the first obstruction.

#include <gtest/gtest.h>

#include "milnor/catalog.hpp"
#include "milnor/closure.hpp"
#include "milnor/engine.hpp"
#include "milnor/hall.hpp"
#include "milnor/higher.hpp"

namespace milnor {
namespace {

Diagram load(const std::string& name, const BuildOptions& o = {}) {
  return Diagram::build(catalog_lookup(name), o);
}

TEST(Higher, StartsAtFirstNonVanishingDegree) {
  auto led = higher_mu(load("5_1^2"), 5);
  ASSERT_TRUE(led.has_value());
  EXPECT_EQ(led->m, 4);
  EXPECT_EQ(led->entries.front().degree, 4);
  EXPECT_EQ(led->at(4).raw[0], first_nonvanishing(load("5_1^2"))->psi[0]);
  EXPECT_EQ(led->at(4).delta.hnf.rank(), 0u);
  EXPECT_FALSE(higher_mu(load("3_1"), 5).has_value());
}

TEST(Higher, MalcevSectionLiftsWords) {
  const GroupWord w = commutator(GroupWord::generator(1), GroupWord::generator(2)) * GroupWord::generator(1);
  UniMatrix a = represent_word(w, 2, 4);
  UniMatrix s = malcev_section(a);
  EXPECT_EQ(s.size(), 5);
  EXPECT_EQ(truncate(s, 4), a);
  EXPECT_TRUE(magnus_image_check(s).pass);
  EXPECT_THROW(malcev_section(section_lift(a)), Error);
}

// The lift chosen for the over-arcs cancels in every conjugation.
TEST(Higher, ArcLiftDoesNotMatter) {
  for (const char* name : {"5_1^2", "6_1^2", "8_a10^2"}) {
    auto z = higher_mu(load(name), 6, SectionKind::ZeroPad);
    auto w = higher_mu(load(name), 6, SectionKind::Witness);
    ASSERT_TRUE(z && w);
    for (const LedgerEntry& e : z->entries) {
      EXPECT_TRUE(lattice_equal(e.delta, w->at(e.degree).delta)) << name << " " << e.degree;
      for (std::size_t j = 0; j < e.raw.size(); ++j) EXPECT_EQ(e.raw[j], w->at(e.degree).raw[j]) << name;
    }
  }
}

TEST(Higher, ClosureValuesAreLieElements) {
  auto led = higher_mu(load("6_2^3"), 5);
  ASSERT_TRUE(led.has_value());
  for (const LedgerEntry& e : led->entries)
    for (const Tensor& v : e.raw) EXPECT_NO_THROW(lie_coordinates(v)) << e.degree;
}

// Where the bracket formula and the normal closure agree on Delta.
TEST(Higher, ClosureDeltaMatchesBracketDelta) {
  for (const char* name : {"5_1^2", "6_1^2", "6_2^2", "8_a10^2", "4_1^2", "2_1^2"}) {
    auto c = higher_mu(load(name), 5, SectionKind::Closure);
    ASSERT_TRUE(c.has_value());
    for (const LedgerEntry& e : c->entries)
      if (e.degree > c->m) EXPECT_TRUE(lattice_equal(e.delta, delta_next(*c, e.degree))) << name << " " << e.degree;
  }
}

// Relations among the degree-4 Borromean defects produce corners at degree 5
// that brackets of the earlier values do not reach.
TEST(Higher, BorromeanClosureDeltaIsLarger) {
  auto c = higher_mu(load("6_2^3"), 5, SectionKind::Closure);
  ASSERT_TRUE(c.has_value());
  const DeltaLattice b = delta_next(*c, 5);
  for (const Tensor& g : b.basis()) EXPECT_TRUE(reduce(g, c->at(5).delta).is_zero());
  EXPECT_GT(c->at(5).delta.hnf.rank(), b.hnf.rank());
}

const std::vector<std::vector<int>> kShifts{{1, 0}, {0, 1}, {2, 1}, {1, 1}};

void expect_base_arc_invariant(const char* name, int max_h) {
  auto ref = higher_mu(load(name), max_h);
  ASSERT_TRUE(ref.has_value());
  for (const auto& shift : kShifts) {
    auto s = higher_mu(load(name, {shift}), max_h);
    ASSERT_TRUE(s.has_value());
    for (const LedgerEntry& e : ref->entries) {
      EXPECT_TRUE(lattice_equal(e.delta, s->at(e.degree).delta)) << name << " " << e.degree;
      for (std::size_t j = 0; j < e.raw.size(); ++j)
        EXPECT_TRUE(congruent(e.raw[j], s->at(e.degree).raw[j], e.delta))
            << name << " degree " << e.degree << " shift " << shift[0] << shift[1] << " component " << j + 1;
    }
  }
}

TEST(Higher, ClosureIsIndependentOfBaseArc) {
  expect_base_arc_invariant("5_1^2", 6);
  expect_base_arc_invariant("7_6^2", 6);
  expect_base_arc_invariant("6_1^2", 5);
  expect_base_arc_invariant("6_2^2", 5);
  expect_base_arc_invariant("8_a10^2", 5);
}

// With lk = 3 the section chosen for earlier defects shows up at degree 6:
// moving the base arc changes the value by an element of order 3 modulo Delta.
TEST(Higher, LinkingThreeBaseArcDependenceAtDegreeSixIsThreeTorsion) {
  auto ref = higher_mu(load("6_1^2"), 6);
  auto s = higher_mu(load("6_1^2", {{1, 0}}), 6);
  ASSERT_TRUE(ref && s);
  const LedgerEntry& e = ref->at(6);
  ASSERT_TRUE(lattice_equal(e.delta, s->at(6).delta));
  for (std::size_t j = 0; j < 2; ++j) {
    const Tensor d = sub(e.raw[j], s->at(6).raw[j]);
    EXPECT_FALSE(reduce(d, e.delta).is_zero());
    EXPECT_TRUE(reduce(scale(d, 3), e.delta).is_zero());
  }
}

TEST(Higher, DefectsProjectToEarlierLevels) {
  auto led = higher_mu(load("6_1^2"), 5);
  ASSERT_TRUE(led.has_value());
  for (const LedgerEntry& e : led->entries)
    for (const UniMatrix& D : e.defects) EXPECT_EQ(D.size(), e.degree + 1);
}

TEST(Higher, DeltaSummary) {
  auto led = higher_mu(load("6_1^2"), 5);
  ASSERT_TRUE(led.has_value());
  DeltaSummary s = summarize(led->at(5).delta);
  EXPECT_EQ(s.torsion, (std::vector<Coeff>{3, 3, 3, 3}));
}

}  // namespace
}  // namespace milnor
