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
 // Refined invariants above the first non-vanishing degree.
 //
 // Past the first obstruction the walk defects are no longer central. They
 // are compared with a section of their projection, and the central
 // remainder is read modulo the lattice Delta_h of brackets generated by
 // lower defects.

#ifndef MILNOR_HIGHER_HPP
#define MILNOR_HIGHER_HPP

#include <optional>
#include <string>
#include <vector>

#include "milnor/diagram.hpp"
#include "milnor/lattice.hpp"
#include "milnor/unimatrix.hpp"

namespace milnor {

struct DeltaLattice {
  int q = 0;
  int degree = 0;
  Lattice hnf;

  std::vector<Tensor> basis() const;
};

DeltaLattice delta_initial(int q, int degree);
DeltaLattice delta_span(int q, int degree, const std::vector<Tensor>& generators);

/* Canonical representative of t modulo the lattice. */
Tensor reduce(const Tensor& t, const DeltaLattice& L);
bool congruent(const Tensor& a, const Tensor& b, const DeltaLattice& L);
bool lattice_equal(const DeltaLattice& a, const DeltaLattice& b);

/* Structure of (Lie elements of this degree) / Delta: torsion orders and
 * the free rank. */
struct DeltaSummary {
  std::size_t generators = 0;
  std::vector<Coeff> torsion;  // invariant factors > 1
  std::size_t free_rank = 0;
};
DeltaSummary summarize(const DeltaLattice& L);

/* How a ledger entry is read off the walk defects.
 *
 * ZeroPad and Witness record the corner of the defect matrix and advance
 * Delta by brackets (delta_next). They differ in how over-arcs are lifted;
 * the lifted corner cancels in every conjugation, so they agree exactly.
 *
 * Closure divides the defect by an element of the normal closure of the
 * earlier defects, lifted by malcev_section, and reads Delta off that
 * closure. The value depends on the section and is not symmetric under
 * renumbering the components. */
enum class SectionKind {
  ZeroPad,
  Witness,
  Closure,
};

/* Canonical lift of A in the image of the representation at size h to size
 * h+1: A is written as an ordered product of powers of Lyndon commutator
 * words, degree by degree, and that product is represented one size up. */
UniMatrix malcev_section(const UniMatrix& a);

struct LedgerEntry {
  int degree = 0;
  std::vector<UniMatrix> defects;  // size degree+1, per component
  std::vector<Tensor> raw;         // central remainder, degree `degree`
  std::vector<Tensor> reduced;     // raw modulo delta
  DeltaLattice delta;
};

struct DefectLedger {
  int q = 0;
  int m = 0;  // first non-vanishing degree
  SectionKind section = SectionKind::Closure;
  std::vector<LedgerEntry> entries;  // degrees m..max_h

  const LedgerEntry& at(int degree) const;
};

/* Generators [v, eta] at target degree, v running over recorded defects and
 * earlier lattice bases, eta over Lyndon tensors of complementary degree. */
DeltaLattice delta_next(const DefectLedger& ledger, int target_degree);

/* nullopt when no defect is nonzero up to max_h. */
std::optional<DefectLedger> higher_mu(const Diagram& d, int max_h,
                                      SectionKind section = SectionKind::Closure);

}  // namespace milnor

#endif  // MILNOR_HIGHER_HPP
