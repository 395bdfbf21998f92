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

#ifndef MDUAL_OMEGA_HPP
#define MDUAL_OMEGA_HPP

#include <string>
#include <vector>

#include "mdual/error.hpp"
#include "mdual/modal_frame.hpp"
#include "mdual/space.hpp"

namespace mdual {

// ΩX: opens ordered by inclusion, □U = int(□_class U), ◇U = int(◇_class U).
// Element i of the result is s.opens()[i] and its id is set_name(s, ·).
ModalFrame omega_space(const RelationalSpace& s);

// Ωf = f⁻¹ as a table from Ω(target) to Ω(source). Throws NotContinuous.
std::vector<Elem> omega_map(const RelationalSpace& source, const RelationalSpace& target,
                            std::span<const Point> map);

struct OmegaMorphism {
  ModalFrameMorphism morphism;  // Ω(target) → Ω(source)
  MorphismClass frame_class;
  SpaceMorphismClass space_class;
  std::vector<Check> lemma;  // morphism-part implications, each checked
};

OmegaMorphism omega_morphism(const SpaceMorphism& f);

struct OmegaClassReport {
  SpaceClass space;
  FrameClass frame;
  std::vector<Check> implications;
  // Frame properties that hold although the matching space property fails.
  std::vector<std::string> coincidences;
};

OmegaClassReport omega_class_report(const RelationalSpace& s);

}  // namespace mdual

#endif  // MDUAL_OMEGA_HPP
