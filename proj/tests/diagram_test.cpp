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
 // PD parsing and diagram construction.

#include <gtest/gtest.h>

#include "milnor/catalog.hpp"
#include "milnor/diagram.hpp"

namespace milnor {
namespace {

Diagram load(const std::string& name, const BuildOptions& o = {}) {
  return Diagram::build(catalog_lookup(name), o);
}

TEST(PD, ParsesCommonSpellings) {
  PDCode a = parse_pd("X(3,2,4,1) X(1,4,2,3)");
  PDCode b = parse_pd("PD[X[3, 2, 4, 1], X[1, 4, 2, 3]]");
  EXPECT_EQ(a.crossings, b.crossings);
  EXPECT_EQ(parse_pd(a.to_string()).crossings, a.crossings);
}

TEST(PD, RejectsMalformedInput) {
  EXPECT_THROW(parse_pd("X(1,2,3)"), ParseError);
  EXPECT_THROW(validate_pd(parse_pd("X(1,2,3,4) X(1,2,3,5)")), ParseError);
  EXPECT_THROW(parse_pd("X(1,2,a,4)"), ParseError);
  EXPECT_THROW(parse_pd(""), ParseError);
}

TEST(Diagram, HopfLink) {
  Diagram d = load("2_1^2");
  EXPECT_EQ(d.num_components(), 2);
  EXPECT_EQ(d.num_crossings(), 2);
  auto lk = linking_matrix(d);
  EXPECT_EQ(std::abs(lk[0][1]), 1);
  EXPECT_EQ(lk[0][1], lk[1][0]);
}

TEST(Diagram, ComponentsAreNumberedBySmallestLabel) {
  Diagram d = load("6_2^3");
  ASSERT_EQ(d.num_components(), 3);
  for (int j = 0; j + 1 < 3; ++j) EXPECT_LT(d.component_edges(j).front(), d.component_edges(j + 1).front());
}

TEST(Diagram, WalksCoverUnderCrossings) {
  Diagram d = load("5_1^2");
  std::size_t steps = 0;
  for (int j = 0; j < d.num_components(); ++j) steps += d.walk(j).size();
  EXPECT_EQ(static_cast<int>(steps), d.num_crossings());
  for (const Arc& a : d.arcs()) EXPECT_FALSE(a.edges.empty());
}

TEST(Diagram, MirrorNegatesLinking) {
  Diagram d = load("4_1^2");
  Diagram m = Diagram::build(mirror(catalog_lookup("4_1^2")));
  EXPECT_EQ(linking_matrix(d)[0][1], 2 * (linking_matrix(d)[0][1] > 0 ? 1 : -1));
  EXPECT_EQ(linking_matrix(m)[0][1], -linking_matrix(d)[0][1]);
}

TEST(Diagram, BaseShiftMovesBaseArc) {
  Diagram d = load("5_1^2");
  Diagram s = load("5_1^2", {{1, 0}});
  EXPECT_NE(d.arcs()[d.base_arc(0)].edges, s.arcs()[s.base_arc(0)].edges);
  EXPECT_EQ(d.arcs()[d.base_arc(1)].edges, s.arcs()[s.base_arc(1)].edges);
}

TEST(Diagram, KinksGiveWrithe) {
  Diagram d = load("0_1^2-kinks");
  auto lk = linking_matrix(d);
  EXPECT_EQ(lk[0][1], 0);
  EXPECT_EQ(std::abs(lk[0][0]), 1);
}

TEST(Catalog, UnknownNameThrows) {
  EXPECT_THROW(catalog_lookup("no_such_link"), UnknownLinkError);
}

}  // namespace
}  // namespace milnor
