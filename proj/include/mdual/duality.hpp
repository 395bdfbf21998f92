/* Copyright 2026 The mdual Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MDUAL_DUALITY_HPP
#define MDUAL_DUALITY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdual/error.hpp"
#include "mdual/modal_frame.hpp"
#include "mdual/points.hpp"
#include "mdual/space.hpp"

namespace mdual {

// Outcome of one executable check. `applicable` is false when the input is
// outside the mode's categories; such a verdict passes vacuously.
struct Verdict {
  std::string kind;  // "spatial", "sober", ...
  Mode mode = Mode::RelSp;
  bool applicable = true;
  std::vector<Check> checks;
  std::map<std::string, bool> properties;        // informational flags
  std::map<std::string, std::size_t> counts;     // hom-set sizes and the like
  std::vector<std::string> notes;

  bool pass() const { return !applicable || all_ok(checks); }
};

// Bijective, order-preserving both ways, commuting with □ and ◇.
bool is_frame_isomorphism(const ModalFrame& source, const ModalFrame& target,
                          std::span<const Elem> map);
std::optional<std::vector<Elem>> find_frame_isomorphism(const ModalFrame& a, const ModalFrame& b);

// Homeomorphism that preserves and reflects the relation.
bool is_space_isomorphism(const RelationalSpace& source, const RelationalSpace& target,
                          std::span<const Point> map, std::string* detail = nullptr);
std::optional<std::vector<Point>> find_space_isomorphism(const RelationalSpace& a,
                                                         const RelationalSpace& b);

// φ_A an isomorphism onto Ω(𝓕A); reports injectivity and both
// strictnesses separately.
Verdict check_spatial(const ModalFrame& frame, Mode mode);
// ψ_X an isomorphism onto 𝓕(ΩX).
Verdict check_sober(const RelationalSpace& space, Mode mode);

// 𝓕(φ_A)∘ψ_{𝓕A} = 1 on 𝓕A.
Verdict check_triangles(const ModalFrame& frame, Mode mode);
// Ω(ψ_X)∘φ_{ΩX} = 1 on ΩX.
Verdict check_triangles(const RelationalSpace& space, Mode mode);

// All mode morphisms A → ΩX, found by choosing monotone images of the
// join-irreducibles of A.
std::vector<std::vector<Elem>> frame_homs(const ModalFrame& source, const ModalFrame& target,
                                          Strictness strictness);
// All maps X → Y that are continuous and reach `level`.
std::vector<std::vector<Point>> space_homs(const RelationalSpace& source,
                                           const RelationalSpace& target, MorphismLevel level);

// f ↦ f^# and g ↦ Ω(g)∘φ_A are inverse bijections between the hom-sets.
Verdict check_adjunction_bijection(const ModalFrame& frame, const RelationalSpace& space,
                                   Mode mode);

struct NamedFrame {
  std::string name;
  ModalFrame frame;
};

struct NamedSpace {
  std::string name;
  RelationalSpace space;
};

struct DualityEntry {
  std::string name;
  std::string kind;  // "frame" or "space"
  Verdict verdict;
  bool round_trip_iso = false;  // Ω𝓕A ≅ A, or 𝓕ΩX ≅ X
};

struct DualityReport {
  Mode mode = Mode::RelSp;
  std::vector<DualityEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;
};

DualityReport duality_report(const std::vector<NamedFrame>& frames,
                             const std::vector<NamedSpace>& spaces, Mode mode);

// One row per axiom group: whether the frame satisfies it and whether the
// constructed relation has the matching property. Rows outside modes with
// both (22) and (24) (seriality: (24)) are recorded but not asserted.
struct CorrespondenceRow {
  std::string property;  // reflexive, symmetric, transitive, serial
  std::vector<int> axioms;
  bool frame_side = false;
  bool space_side = false;
  bool asserted = false;

  bool ok() const { return !asserted || !frame_side || space_side; }
};

struct CorrespondenceReport {
  Mode mode = Mode::RelSp;
  bool applicable = true;
  std::vector<CorrespondenceRow> rows;

  bool pass() const;
};

CorrespondenceReport correspondence_report(const ModalFrame& frame, Mode mode);

// Space side: the Ω implications (lsc, continuity, equivalence, seriality).
std::vector<Check> correspondence_checks(const RelationalSpace& space);

}  // namespace mdual

#endif  // MDUAL_DUALITY_HPP
