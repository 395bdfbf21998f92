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

#include "doctest.h"
#include "mdual/enumerate.hpp"
#include "mdual/modal_frame.hpp"
#include "support.hpp"

using namespace mdual;
using namespace mdual::testing;

namespace {

std::vector<std::string> rejection(FiniteLattice l, const std::vector<std::string>& box,
                                   const std::vector<std::string>& dia) {
  try {
    frame(std::move(l), box, dia);
  } catch (const Error& e) {
    auto w = e.witnesses();
    w.insert(w.begin(), std::string(to_string(e.kind())));
    return w;
  }
  return {};
}

Character char_of(const FiniteLattice& l, const std::string& prime) { return {l.index_of(prime)}; }

// Frames over every distributive lattice with at most five elements.
const std::vector<ModalFrame>& small_frames() {
  static const auto frames = [] {
    std::vector<ModalFrame> out;
    for (const auto& l : distributive_lattices(5))
      for (auto& f : modal_frames(l)) out.push_back(std::move(f));
    return out;
  }();
  return frames;
}

}  // namespace

TEST_SUITE("modal-frame") {
  TEST_CASE("classification examples") {
    const auto id = classify_frame(identity_frame(chain3()));
    CHECK(id.modal);
    CHECK(id.lower);
    CHECK(id.convex);
    CHECK(id.serial);
    CHECK(id.equivalence);
    CHECK(id.modally_spectral);

    const auto btt = classify_frame(load_frame("chain3-btt"));
    CHECK(btt.modal);
    CHECK(btt.lower);
    CHECK(btt.convex);
    CHECK(btt.serial);
    CHECK_FALSE(btt.equivalence);
    CHECK_FALSE(btt.axioms.at(11));
  }

  TEST_CASE("validation examples") {
    const auto top = rejection(chain3(), {"top", "top", "top"}, {"top", "top", "top"});
    REQUIRE(top.size() >= 2);
    CHECK(top[0] == "AxiomViolation");
    CHECK(top[1] == "7");

    CHECK(rejection(chain3(), {"bot", "m", "top"}, {"bot", "m", "top"}).empty());
    CHECK_NOTHROW(load_frame("chain3-btt"));

    const auto mono = rejection(chain3(), {"top", "bot", "top"}, {"bot", "m", "top"});
    REQUIRE(!mono.empty());
    CHECK(mono[0] == "NotMonotone");
    CHECK(mono[1] == "box");
  }

  TEST_CASE("box constant top with identity diamond breaks axiom 6") {
    const auto w = rejection(chain3(), {"top", "top", "top"}, {"bot", "m", "top"});
    REQUIRE(w.size() >= 2);
    CHECK(w[0] == "AxiomViolation");
    CHECK(w[1] == "6");

    // F_p is still the whole lattice on the raw tables.
    const auto l = chain3();
    const ModalFrame raw{l, table(l, {"top", "top", "top"}), identity_table(3)};
    for (auto p : characters(l)) CHECK(canonical_filter(raw, p).generator == l.bottom());
  }

  TEST_CASE("morphism classification") {
    const auto a = identity_frame(chain3());
    CHECK(classify_morphism(a, a, identity_table(3)).kind == MorphismKind::Strict);

    const auto one = identity_frame(FiniteLattice::validate({"e"}, {}));
    CHECK(classify_morphism(a, one, std::vector<Elem>{0, 0, 0}).kind == MorphismKind::Strict);

    // m ↦ top is still a frame map; moving bot is not.
    const auto bad = classify_morphism(a, a, table(a.lattice, {"bot", "top", "top"}));
    CHECK(bad.frame_morphism);
    const auto broken = classify_morphism(a, a, table(a.lattice, {"m", "m", "top"}));
    CHECK(broken.kind == MorphismKind::NotMorphism);
    CHECK_FALSE(broken.detail.empty());
  }

  TEST_CASE("canonical filter and element") {
    const auto btt = load_frame("chain3-btt");
    const auto& l = btt.lattice;
    CHECK(canonical_filter(btt, char_of(l, "m")).generator == l.index_of("m"));
    CHECK(canonical_element(btt, char_of(l, "m")) == l.index_of("bot"));

    const auto id = identity_frame(chain3());
    for (auto p : characters(id.lattice)) {
      CHECK(id.lattice.up(canonical_filter(id, p).generator) == char_set(id.lattice, p));
      CHECK(canonical_element(id, p) == p.prime);
      CHECK(is_replete(id, p));
    }
    CHECK(frame_is_replete(identity_frame(FiniteLattice::validate({"e"}, {}))));
  }

  TEST_CASE("ideal completion examples") {
    const auto one = ideal_completion(identity_frame(FiniteLattice::validate({"e"}, {})));
    CHECK(one.frame.size() == 1);

    const auto c = ideal_completion(identity_frame(chain3()));
    CHECK(c.frame.size() == 3);
    CHECK(c.unit_is_iso);
    CHECK(c.unit_class.kind == MorphismKind::Strict);
    CHECK(c.modally_spectral);
    for (Elem a = 0; a < 3; ++a) {
      CHECK(c.frame.box[c.unit[a]] == c.unit[a]);
      CHECK(c.frame.dia[c.unit[a]] == c.unit[a]);
    }
  }

  TEST_CASE("compact reflection examples") {
    const auto id = compacts_reflection(identity_frame(chain3()));
    CHECK(id.compacts.size() == 3);
    CHECK(id.is_iso);
    CHECK(id.transfer_agrees());
    for (const auto& t : id.transfer) CHECK(t.on_frame);

    const auto btt = compacts_reflection(load_frame("chain3-btt"));
    CHECK(btt.transfer_agrees());
    for (const auto& t : btt.transfer)
      if (t.rule == "11") {
        CHECK_FALSE(t.on_frame);
        CHECK_FALSE(t.on_compacts);
      }
  }

  TEST_CASE("properties over every frame on lattices up to 5 elements") {
    REQUIRE(small_frames().size() == 2444);
    for (const auto& f : small_frames()) {
      const auto& l = f.lattice;
      const auto cls = classify_frame(f);
      CHECK(cls.modally_spectral);
      if (cls.convex) CHECK(cls.lower);
      bool eq = true;
      for (int ax = 11; ax <= 16; ++ax) eq = eq && cls.axioms.at(ax);
      CHECK(cls.equivalence == eq);

      for (auto p : characters(l)) {
        // F_p as a set equals the principal filter it is reported as.
        Subset fp(l.size());
        for (Elem c = 0; c < l.size(); ++c)
          if (p(l, f.box[c])) fp.set(c);
        CHECK(is_filter(l, fp));
        CHECK(fp == l.up(canonical_filter(f, p).generator));

        if (cls.convex)
          for (Elem b = 0; b < l.size(); ++b)
            for (Elem c = 0; c < l.size(); ++c)
              if (!fp.test(c) && !p(l, f.dia[b])) CHECK_FALSE(fp.test(l.join(b, c)));

        const auto ap = canonical_element(f, p);
        if (cls.serial && !p(l, f.dia[ap])) CHECK_FALSE(p(l, f.box[ap]));
        if (cls.lower) CHECK(is_replete(f, p));
      }

      const auto ic = ideal_completion(f);
      CHECK(ic.unit_class.box_strict());
      CHECK(ic.unit_class.dia_strict());
      CHECK(ic.unit_is_iso);

      const auto cr = compacts_reflection(f);
      CHECK(cr.is_iso);
      CHECK(cr.transfer_agrees());
      CHECK(classify_frame(cr.compact_frame).equivalence == cls.equivalence);
    }
  }
}
