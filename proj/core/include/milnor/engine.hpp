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
 // Level-by-level lifting of Wirtinger arc assignments into the unipotent
 // representation, and the walk defects that detect the first non-vanishing
 // Milnor invariant.

#ifndef MILNOR_ENGINE_HPP
#define MILNOR_ENGINE_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "milnor/diagram.hpp"
#include "milnor/unimatrix.hpp"

namespace milnor {

/* Matrices of size `level`, one per arc. */
struct ArcAssignment {
  int level = 0;
  std::vector<UniMatrix> arcs;
};

/* Refusal to lift past a level whose defect is nonzero. */
class LiftRefused : public Error {
 public:
  LiftRefused(int level, int component);
  int level, component;
};

/* Lift used for the over-arc matrices during a walk. */
using LiftFn = std::function<UniMatrix(const UniMatrix&)>;

struct WalkResult {
  std::vector<std::pair<int, UniMatrix>> arc_matrices;  // arc id -> size level+1
  UniMatrix defect;                                     // size level+1
};

ArcAssignment base_assignment(const Diagram& d);

/* Walk component j (0-based) at the assignment's level. */
WalkResult walk_defect(const Diagram& d, const ArcAssignment& a, int j, const LiftFn& lift = {});

struct LevelStep {
  ArcAssignment next;            // level + 1
  std::vector<UniMatrix> defects;
};
/* All walks at one level, without any vanishing requirement. */
LevelStep step_level(const Diagram& d, const ArcAssignment& a);

/* Central part of the defect of component j; degree = a.level. */
Tensor psi(const Diagram& d, const ArcAssignment& a, int j);

/* Next assignment; refuses when a defect is nonzero and checks every
 * Wirtinger relation of the result. */
ArcAssignment lift(const Diagram& d, const ArcAssignment& a);

/* out-arc == B^-eps in-arc B^eps at every crossing. */
bool wirtinger_holds(const Diagram& d, const ArcAssignment& a);

/* I_j(w) = [l^(j), w] */
Tensor apply_Ij(const Tensor& omega, int j);
/* Inverse of I_j on its image; throws when psi is not in the image. */
Tensor invert_Ij(const Tensor& psi, int j);

struct InvariantResult {
  int q = 0;
  int m = 0;
  std::vector<Tensor> psi;        // degree m, per component
  std::vector<Tensor> longitude;  // degree m-1, I_j(longitude[j]) = psi[j]
};

/* nullopt: every defect vanishes up to max_degree. */
std::optional<InvariantResult> first_nonvanishing(const Diagram& d, int max_degree = 8);

/* Coefficient tables of the longitude classes. */
std::vector<std::map<IndexWord, Coeff>> mu_numbers(const InvariantResult& r);

}  // namespace milnor

#endif  // MILNOR_ENGINE_HPP
