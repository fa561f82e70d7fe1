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
 // Oriented link diagrams from planar-diagram codes.
 //
 // X(a,b,c,d) lists the edges at a crossing counterclockwise, starting at
 // the incoming under-strand; the under-strand runs a -> c.

#ifndef MILNOR_DIAGRAM_HPP
#define MILNOR_DIAGRAM_HPP

#include <array>
#include <string>
#include <vector>

#include "milnor/common.hpp"

namespace milnor {

struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  std::string to_string() const;
};

/* Accepts "X(1,3,2,4) X(3,1,4,2)", optionally with brackets and a PD[...]
 * wrapper. Every label must occur exactly twice. */
PDCode parse_pd(const std::string& text);
void validate_pd(const PDCode& pd);

struct Crossing {
  int under_in = 0, under_out = 0;  // edge labels
  int over_in = 0, over_out = 0;
  int sign = 0;                     // +1 when the over-strand runs d -> b
  int under_component = 0;          // 0-based
  int over_component = 0;
  int over_arc = 0;
};

struct Arc {
  int component = 0;       // 0-based
  std::vector<int> edges;  // labels in traversal order
};

/* One under-crossing on a component walk: alpha runs into the crossing,
 * beta is the arc passing over it. */
struct WalkStep {
  int alpha = 0;
  int beta = 0;
  int epsilon = 0;
};

struct BuildOptions {
  /* Rotate the arc order of component j by base_shift[j] arcs, which moves
   * the base arc. Empty means the canonical choice. */
  std::vector<int> base_shift;
};

class Diagram {
 public:
  static Diagram build(const PDCode& pd, const BuildOptions& opts = {});

  int num_components() const { return static_cast<int>(components_.size()); }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  /* Edge labels of component j in traversal order, from its smallest. */
  const std::vector<int>& component_edges(int j) const { return components_.at(j); }
  /* Arc ids of component j in walk order; the first is the base arc. */
  const std::vector<int>& component_arcs(int j) const { return comp_arcs_.at(j); }
  const std::vector<WalkStep>& walk(int j) const { return walks_.at(j); }
  int base_arc(int j) const { return comp_arcs_.at(j).front(); }
  int arc_of_edge(int label) const;

 private:
  std::vector<std::vector<int>> components_;
  std::vector<Arc> arcs_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> comp_arcs_;
  std::vector<std::vector<WalkStep>> walks_;
  std::vector<int> arc_of_;  // indexed by label
};

/* Off-diagonal: linking numbers. Diagonal: writhe of each component. */
std::vector<std::vector<int>> linking_matrix(const Diagram& d);

/* Mirror image: every crossing switched. */
PDCode mirror(const PDCode& pd);

}  // namespace milnor

#endif  // MILNOR_DIAGRAM_HPP
