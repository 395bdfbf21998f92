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

#include "mdual/omega.hpp"

namespace mdual {

ModalFrame omega_space(const RelationalSpace& s) {
  const auto& opens = s.opens();
  const auto m = opens.size();
  std::vector<std::string> ids;
  ids.reserve(m);
  for (const auto& u : opens) ids.push_back(set_name(s, u));
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      if (opens[i].is_subset_of(opens[j])) order.emplace_back(i, j);
  std::vector<Elem> box(m), dia(m);
  for (Elem i = 0; i < m; ++i) {
    box[i] = s.open_position(interior(s, box_class(s, opens[i])));
    dia[i] = s.open_position(interior(s, dia_class(s, opens[i])));
  }
  return validate_modal_frame(FiniteLattice::from_order(std::move(ids), order), std::move(box),
                              std::move(dia));
}

std::vector<Elem> omega_map(const RelationalSpace& source, const RelationalSpace& target,
                            std::span<const Point> map) {
  std::vector<Elem> out;
  out.reserve(target.opens().size());
  for (const auto& u : target.opens()) {
    const Subset pre = preimage(map, source.size(), u);
    if (!source.is_open(pre))
      throw Error(ErrorKind::NotContinuous,
                  "preimage of " + set_name(target, u) + " is " + set_name(source, pre) +
                      ", which is not open",
                  {set_name(target, u)});
    out.push_back(source.open_position(pre));
  }
  return out;
}

OmegaMorphism omega_morphism(const SpaceMorphism& f) {
  OmegaMorphism out;
  out.space_class = classify_space_morphism(f);
  auto table = omega_map(f.source, f.target, f.map);
  out.morphism = ModalFrameMorphism{omega_space(f.target), omega_space(f.source), std::move(table)};
  out.frame_class = classify_morphism(out.morphism);
  const auto& sc = out.space_class;
  const auto& fc = out.frame_class;
  const auto target_class = classify_space(f.target);
  const bool relational = sc.continuous && sc.forward;
  out.lemma = {
      {"relational ⟹ f∘□ ≤ □∘f", relational, fc.frame_morphism && fc.box_lax, ""},
      {"p-condition ⟹ f∘◇ ≤ ◇∘f", sc.continuous && sc.back_p, fc.frame_morphism && fc.dia_lax, ""},
      {"p-morphism ⟹ modal frame morphism", at_least(sc, MorphismLevel::PMorphism),
       fc.kind != MorphismKind::NotMorphism, ""},
      {"relational, lsc target ⟹ ◇∘f ≤ f∘◇", relational && target_class.lsc, fc.dia_reverse, ""},
      {"p-morphism, lsc target ⟹ diamond-strict",
       at_least(sc, MorphismLevel::PMorphism) && target_class.lsc, fc.dia_strict(), ""},
      {"q-condition, usc target ⟹ □∘f ≤ f∘□", sc.continuous && sc.back_q && target_class.usc,
       fc.box_reverse, ""},
      {"relational, q-condition, usc target ⟹ box-strict",
       relational && sc.back_q && target_class.usc, fc.box_strict(), ""},
  };
  return out;
}

OmegaClassReport omega_class_report(const RelationalSpace& s) {
  OmegaClassReport r;
  r.space = classify_space(s);
  r.frame = classify_frame(omega_space(s));
  auto implies = [&](std::string name, bool premise, bool conclusion) {
    r.implications.push_back(Check{std::move(name), premise, conclusion, ""});
  };
  implies("ΩX is a modal frame", true, r.frame.modal);
  implies("lsc ⟹ lower", r.space.lsc, r.frame.lower);
  implies("continuous ⟹ convex", r.space.continuous, r.frame.convex);
  implies("equivalence space ⟹ equivalence frame", r.space.equivalence_space, r.frame.equivalence);
  implies("serial ⟹ serial", r.space.serial, r.frame.serial);
  if (!r.space.lsc && r.frame.lower) r.coincidences.push_back("lower without lsc");
  if (!r.space.continuous && r.frame.convex) r.coincidences.push_back("convex without continuity");
  if (!r.space.equivalence_space && r.frame.equivalence)
    r.coincidences.push_back("equivalence frame without equivalence space");
  if (!r.space.serial && r.frame.serial) r.coincidences.push_back("serial frame without serial relation");
  return r;
}

}  // namespace mdual
