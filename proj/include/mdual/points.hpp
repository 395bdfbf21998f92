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

#ifndef MDUAL_POINTS_HPP
#define MDUAL_POINTS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdual/error.hpp"
#include "mdual/modal_frame.hpp"
#include "mdual/space.hpp"

namespace mdual {

// The seven constructions, one per pairing of a frame category with a
// relational-space category.
enum class Mode { RelSp, RelSpL, RelSpQ, RelSpQL, RelSpQU, RelSpQC, EqSpQ };

struct ModeInfo {
  Mode mode;
  std::string_view name;            // CLI spelling, e.g. "relspq_c"
  std::string_view frame_category;  // label used in reports
  std::string_view space_category;
  bool triple;                      // pre-points (p,a,F) rather than (p,a)
  bool cond22;                      // {c : p(◇c)=0} ⊆ ↓a
  bool cond23;                      // F_p ⊆ F
  bool cond24;                      // F ⊆ F_p
  bool cond30;                      // the box witness condition
  Strictness morphisms;             // frame-side morphisms
  MorphismLevel space_morphisms;    // space-side morphisms
  bool needs_lsc;
  bool needs_usc;
  bool equivalence_only;            // both sides restricted to equivalence objects
};

const ModeInfo& mode_info(Mode mode);
std::span<const Mode> all_modes();
// Throws InvalidInput on an unknown name.
Mode parse_mode(std::string_view name);
inline std::string_view to_string(Mode mode) { return mode_info(mode).name; }

// Object membership for the categories a mode pairs.
bool frame_in_category(const ModalFrame& frame, Mode mode);
bool space_in_category(const RelationalSpace& space, Mode mode);

// (p, a, F). Pair pre-points carry filter = F_p so both forms share code;
// the pair relation is still computed from the character (see
// relation_holds).
struct PrePoint {
  Character character;
  Elem element = 0;
  Elem filter = 0;  // generator of the principal filter F

  friend auto operator<=>(const PrePoint&, const PrePoint&) = default;
};

// Pre-point conditions 21-24 for one tuple.
bool prepoint_condition(const ModalFrame& frame, int condition, const PrePoint& u);
bool is_prepoint(const ModalFrame& frame, Mode mode, const PrePoint& u);

// All pre-points of the mode, ordered by character, element, filter.
std::vector<PrePoint> enumerate_prepoints(const ModalFrame& frame, Mode mode);

// Relation conditions 25-28 between a pre-point and a character:
//   25  F ⊆ char(q)      27  p∘□ ≤ q
//   26  q(a) = 0         28  q ≤ p∘◇
bool relation_condition(const ModalFrame& frame, int condition, const PrePoint& u, Character q);

// u R_A v: 26 and 27 for pairs, 26 and 25 for triples.
bool relation_holds(const ModalFrame& frame, Mode mode, const PrePoint& u, const PrePoint& v);

struct PruneStep {
  std::size_t candidate;  // index into the candidate list
  Elem element;           // the c without a witness
  int condition;          // 29 or 30
};

struct PruneResult {
  std::vector<std::size_t> survivors;  // candidate indices, increasing
  std::vector<PruneStep> trace;        // deletions in order
};

struct PruneOptions {
  // Permutation of candidate indices giving the initial scan order; empty
  // means index order.
  std::vector<std::size_t> scan_order;
};

// Largest subset of `candidates` closed under the mode's point conditions,
// computed with a worklist of per-(candidate, c) witness counters.
PruneResult prune_points(const ModalFrame& frame, Mode mode, std::span<const PrePoint> candidates,
                         const PruneOptions& options = {});

// Same fixed point by synchronous rounds: every round scans all survivors
// against the previous round's set and deletes the violators together.
PruneResult prune_points_rounds(const ModalFrame& frame, Mode mode,
                                std::span<const PrePoint> candidates);

// 𝓕(A) with φ_A and the self-checks on φ_A.
struct PointSpace {
  Mode mode = Mode::RelSp;
  ModalFrame frame;
  std::vector<PrePoint> points;
  RelationalSpace space;         // point i is points[i]
  std::vector<Subset> phi;       // φ_A(c), indexed by element
  std::vector<Elem> phi_open;    // φ_A(c) as an element of omega
  ModalFrame omega;              // Ω(space)
  MorphismClass phi_class;
  std::vector<PruneStep> trace;  // candidates indexed as enumerate_prepoints
  std::vector<Check> checks;

  std::optional<std::size_t> find(const PrePoint& u) const;
};

PointSpace build_point_space(const ModalFrame& frame, Mode mode);
Subset phi(const PointSpace& fa, Elem c);

// "(m,bot,top)" for triples, "(m,bot)" for pairs; the character is named
// by its prime element.
std::string point_name(const FiniteLattice& lattice, Mode mode, const PrePoint& u);

struct TripmotResult {
  bool left = false;   // c ≤ a  ⟺  R→(u) ∩ φ(c) = ∅
  bool right = false;  // c ∈ F  ⟺  R→(u) ⊆ φ(c); true in pair modes
};

TripmotResult tripmot_check(const PointSpace& fa, std::size_t point, Elem c);

// f^# : X → 𝓕(A) for a frame morphism f : A → ΩX (f given as a table into
// omega_space(X)). Throws NotAMorphismOfMode when f is not in the mode's
// frame category.
struct FSharpResult {
  std::vector<std::size_t> map;  // point of X ↦ point of 𝓕(A)
  std::vector<PrePoint> images;  // the computed tuples, point or not
  std::vector<Check> checks;
  std::size_t uniqueness_candidates = 0;  // maps searched for uniqueness
};

// The tuples (p_x, a_x, [F_x]) alone, with no category check.
std::vector<PrePoint> f_sharp_tuples(const ModalFrame& frame, Mode mode,
                                     const RelationalSpace& x, std::span<const Elem> f);

FSharpResult f_sharp(const PointSpace& fa, const RelationalSpace& x, std::span<const Elem> f,
                     bool check_uniqueness = true);

// The unit ψ_X : X → 𝓕(ΩX) from the explicit open-set formulas.
struct PsiResult {
  PointSpace target;  // 𝓕(ΩX)
  std::vector<std::size_t> map;
  std::vector<PrePoint> images;
  std::vector<Check> checks;
};

PsiResult psi(const RelationalSpace& x, Mode mode);

// 𝓕(f) : 𝓕(B) → 𝓕(A) for f : A → B. Throws NotAMorphismOfMode, or
// ImageNotAPoint when some image misses 𝓕(A).
std::vector<std::size_t> point_functor_on_morphism(const PointSpace& fa, const PointSpace& fb,
                                                   std::span<const Elem> f);

// Some q with q(a)=0, q(b)=1 and p∘□ ≤ q, by search over characters.
// Throws PreconditionViolated unless p(◇a)=0 and p(◇b)=1, NoWitness if none.
Character related_character(const ModalFrame& frame, Character p, Elem a, Elem b);

// A surviving point (p, b, [F]) with a ≤ b: maximal b, then minimal filter
// generator, then construction order. Throws PreconditionViolated unless
// p(◇a)=0, NoWitness if none survives.
PrePoint extend_to_point(const PointSpace& fa, Character p, Elem a);
PrePoint extend_to_point(const ModalFrame& frame, Character p, Elem a, Mode mode);

}  // namespace mdual

#endif  // MDUAL_POINTS_HPP
