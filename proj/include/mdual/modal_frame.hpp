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

#ifndef MDUAL_MODAL_FRAME_HPP
#define MDUAL_MODAL_FRAME_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdual/error.hpp"
#include "mdual/lattice.hpp"

namespace mdual {

// A finite frame with total box/dia tables indexed by element.
struct ModalFrame {
  FiniteLattice lattice;
  std::vector<Elem> box;
  std::vector<Elem> dia;

  std::size_t size() const noexcept { return lattice.size(); }
  friend bool operator==(const ModalFrame&, const ModalFrame&) = default;
};

// Axiom ids follow the usual numbering of the modal-frame inequalities:
//   4  ⊤ ≤ □⊤                 11  □a ≤ a
//   5  □a ∧ □b ≤ □(a∧b)       12  a ≤ ◇a
//   6  □a ∧ ◇b ≤ ◇(a∧b)       13  □a ≤ □□a
//   7  ◇⊥ ≤ ⊥                 14  ◇◇a ≤ ◇a
//   8  ◇(a∨b) ≤ ◇a ∨ ◇b       15  ◇□a ≤ a
//   9  □(a∨b) ≤ □a ∨ ◇b       16  a ≤ □◇a
//  10  □a ≤ ◇a
inline constexpr int kFirstAxiom = 4;
inline constexpr int kLastAxiom = 16;

struct Violation {
  std::string rule;  // "monotone-box", "monotone-dia" or the axiom id
  std::vector<Elem> witness;
};

// First violating tuple of one axiom, or empty when it holds everywhere.
std::optional<Violation> axiom_violation(const FiniteLattice& lattice, std::span<const Elem> box,
                                         std::span<const Elem> dia, int axiom);
bool axiom_holds(const ModalFrame& frame, int axiom);

// Monotonicity of both operators and axioms 4-7, every violation.
std::vector<Violation> modal_frame_violations(const FiniteLattice& lattice,
                                              std::span<const Elem> box,
                                              std::span<const Elem> dia);

ModalFrame validate_modal_frame(FiniteLattice lattice, std::vector<Elem> box,
                                std::vector<Elem> dia);

struct FrameClass {
  bool modal = false;
  bool lower = false;
  bool convex = false;
  bool serial = false;
  bool equivalence = false;
  bool modally_spectral = false;
  std::map<int, bool> axioms;  // 4..16
};

FrameClass classify_frame(const ModalFrame& frame);

bool op_is_compact(const FiniteLattice& lattice, std::span<const Elem> op);
bool op_is_continuous(const FiniteLattice& lattice, std::span<const Elem> op);
bool is_modally_spectral(const ModalFrame& frame);

// --- morphisms ---

enum class MorphismKind { NotMorphism, Lax, BoxStrict, DiamondStrict, Strict };
std::string_view to_string(MorphismKind kind);

struct MorphismClass {
  MorphismKind kind = MorphismKind::NotMorphism;
  bool frame_morphism = false;
  bool box_lax = false;       // f∘□ ≤ □∘f
  bool dia_lax = false;       // f∘◇ ≤ ◇∘f
  bool box_reverse = false;   // □∘f ≤ f∘□
  bool dia_reverse = false;   // ◇∘f ≤ f∘◇
  std::string detail;         // first failure, empty if none
  std::vector<Elem> witness;  // source elements of the first failure

  bool box_strict() const noexcept { return box_lax && box_reverse; }
  bool dia_strict() const noexcept { return dia_lax && dia_reverse; }
};

bool preserves_frame_structure(const FiniteLattice& source, const FiniteLattice& target,
                               std::span<const Elem> map, std::string* detail = nullptr,
                               std::vector<Elem>* witness = nullptr);

MorphismClass classify_morphism(const ModalFrame& source, const ModalFrame& target,
                                std::span<const Elem> map);

struct ModalFrameMorphism {
  ModalFrame source;
  ModalFrame target;
  std::vector<Elem> map;
};

inline MorphismClass classify_morphism(const ModalFrameMorphism& m) {
  return classify_morphism(m.source, m.target, m.map);
}

// Which strictness a morphism category demands.
enum class Strictness { Lax, BoxStrict, DiamondStrict, Strict };
std::string_view to_string(Strictness s);
bool satisfies(const MorphismClass& cls, Strictness required);

// --- canonical data of a character ---

// F_p = {c : p(□c) = 1}, returned by generator.
PrincipalFilter canonical_filter(const ModalFrame& frame, Character p);
// a_p = ⋁{c : p(◇c) = 0}.
Elem canonical_element(const ModalFrame& frame, Character p);
bool is_replete(const ModalFrame& frame, Character p);
bool frame_is_replete(const ModalFrame& frame);

// --- ideal completion and compact reflection ---

struct IdealCompletion {
  ModalFrame frame;             // Idl(B) with the induced operators
  std::vector<Subset> ideals;   // element i of `frame` is ideals[i]
  std::vector<Elem> unit;       // a ↦ ↓a
  MorphismClass unit_class;
  bool unit_is_iso = false;
  bool modally_spectral = false;
};

IdealCompletion ideal_completion(const ModalFrame& base);

struct AxiomTransfer {
  std::string rule;  // "monotone-box", "monotone-dia" or an axiom id 8..16
  bool on_frame = false;
  bool on_compacts = false;
};

struct CompactReflection {
  std::vector<Elem> compacts;     // K(A), as elements of A, increasing
  ModalFrame compact_frame;       // K(A) with restricted operators
  IdealCompletion completion;     // Irs(K(A))
  std::vector<Elem> to_ideals;    // a ↦ K(A) ∩ ↓a, into completion.frame
  MorphismClass iso_class;
  bool is_iso = false;
  std::vector<AxiomTransfer> transfer;

  bool transfer_agrees() const;
};

CompactReflection compacts_reflection(const ModalFrame& frame);

}  // namespace mdual

#endif  // MDUAL_MODAL_FRAME_HPP
