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
#include "mdual/duality.hpp"
#include "mdual/enumerate.hpp"
#include "mdual/omega.hpp"
#include "support.hpp"

using namespace mdual;
using namespace mdual::testing;

namespace {

const std::vector<ModalFrame>& frames_up_to_4() {
  static const auto frames = [] {
    std::vector<ModalFrame> out;
    for (const auto& l : distributive_lattices(4))
      for (auto& f : modal_frames(l)) out.push_back(std::move(f));
    return out;
  }();
  return frames;
}

const CorrespondenceRow& row(const CorrespondenceReport& r, const std::string& property) {
  for (const auto& x : r.rows)
    if (x.property == property) return x;
  FAIL("no row " << property);
  return r.rows.front();
}

ModalFrame one_element() { return identity_frame(FiniteLattice::validate({"e"}, {})); }

}  // namespace

TEST_SUITE("duality-verify") {
  TEST_CASE("spatiality examples") {
    const auto v = check_spatial(identity_frame(chain3()), Mode::RelSpQC);
    CHECK(v.applicable);
    CHECK(v.pass());
    CHECK(v.properties.at("injective"));
    CHECK(v.properties.at("surjective"));
    CHECK(v.properties.at("box_strict"));
    CHECK(v.properties.at("diamond_strict"));
    CHECK(v.counts.at("points") == 2);

    for (auto m : all_modes()) CHECK(check_spatial(one_element(), m).pass());
    for (const auto& f : frames_up_to_4())
      for (auto m : {Mode::RelSp, Mode::RelSpQ}) {
        const auto s = check_spatial(f, m);
        CHECK(s.applicable);
        CHECK(s.pass());
      }
  }

  TEST_CASE("sobriety examples") {
    CHECK(check_sober(load_space("s1"), Mode::RelSpQC).pass());
    const auto doubled = check_sober(load_space("doubled-point"), Mode::RelSpQC);
    CHECK(doubled.applicable);
    CHECK_FALSE(doubled.pass());
    for (const std::string name : {"chain3-id", "chain3-btt", "convex-not-equiv", "serial-only"})
      for (auto m : all_modes()) {
        const auto fa = build_point_space(load_frame(name), m);
        const auto v = check_sober(fa.space, m);
        CAPTURE(name);
        CAPTURE(to_string(m));
        CHECK(v.pass());
      }
  }

  TEST_CASE("triangle identities") {
    for (auto m : all_modes()) {
      CHECK(check_triangles(identity_frame(chain3()), m).pass());
      CHECK(check_triangles(load_space("s1"), m).pass());
      CHECK(check_triangles(one_element(), m).pass());
      CHECK(check_triangles(RelationalSpace{}, m).pass());
    }
  }

  TEST_CASE("adjunction examples") {
    const auto s1 = load_space("s1");
    const auto v = check_adjunction_bijection(omega_space(s1), s1, Mode::RelSpQC);
    CHECK(v.pass());
    CHECK(v.counts.at("frame_homs") >= 1);
    CHECK(v.counts.at("frame_homs") == v.counts.at("space_homs"));

    const auto e = check_adjunction_bijection(identity_frame(chain3()), RelationalSpace{}, Mode::RelSpQC);
    CHECK(e.pass());
    CHECK(e.counts.at("space_homs") == 1);

    const auto one = check_adjunction_bijection(one_element(), s1, Mode::RelSp);
    CHECK(one.pass());
    CHECK(one.counts.at("frame_homs") == one.counts.at("space_homs"));
  }

  TEST_CASE("duality report") {
    const std::vector<NamedFrame> frames{{"chain3-id", load_frame("chain3-id")}};
    const std::vector<NamedSpace> spaces{{"s1", load_space("s1")},
                                         {"discrete-full-2pt", load_space("discrete-full-2pt")}};
    const auto r = duality_report(frames, spaces, Mode::RelSpQC);
    CHECK(r.failed == 0);
    CHECK(r.passed == 3);
    for (const auto& e : r.entries) CHECK(e.round_trip_iso);

    CHECK(duality_report({}, {}, Mode::RelSpQC).entries.empty());

    auto with_doubled = spaces;
    with_doubled.push_back({"doubled-point", load_space("doubled-point")});
    const auto d = duality_report(frames, with_doubled, Mode::RelSpQC);
    CHECK(d.failed == 1);
    CHECK_FALSE(d.entries.back().verdict.pass());
    CHECK(d.entries.back().verdict.kind == "sober");
  }

  TEST_CASE("correspondence examples") {
    const auto id = correspondence_report(identity_frame(chain3()), Mode::RelSpQC);
    CHECK(id.pass());
    for (const std::string p : {"reflexive", "symmetric", "transitive"}) {
      CHECK(row(id, p).asserted);
      CHECK(row(id, p).frame_side);
      CHECK(row(id, p).space_side);
    }
    const auto serial = correspondence_report(load_frame("serial-only"), Mode::RelSpQC);
    CHECK(serial.pass());
    CHECK(row(serial, "serial").frame_side);
    CHECK(row(serial, "serial").space_side);
    CHECK_FALSE(row(serial, "reflexive").frame_side);

    const auto refl = correspondence_report(load_frame("reflexive-only"), Mode::RelSpQC);
    CHECK(refl.pass());
    CHECK(row(refl, "reflexive").frame_side);
    CHECK(row(refl, "reflexive").space_side);
    CHECK_FALSE(row(refl, "symmetric").frame_side);
    CHECK_FALSE(row(refl, "transitive").frame_side);

    CHECK(all_ok(correspondence_checks(load_space("s1"))));
  }

  TEST_CASE("isomorphism search") {
    const auto s1 = load_space("s1");
    const auto swapped = space({"y", "x"}, {{}, {"y"}, {"x", "y"}}, {{"x", "y"}, {"y", "y"}});
    const auto iso = find_space_isomorphism(s1, swapped);
    REQUIRE(iso.has_value());
    CHECK(is_space_isomorphism(s1, swapped, *iso));
    CHECK_FALSE(find_space_isomorphism(s1, load_space("discrete-full-2pt")).has_value());
    CHECK_FALSE(find_frame_isomorphism(load_frame("chain3-id"), load_frame("chain3-btt")).has_value());
  }

  TEST_CASE("frame hom-sets agree with brute force on frames up to 4 elements") {
    const auto& frames = frames_up_to_4();
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < frames.size(); i += 3)
      for (std::size_t j = 0; j < frames.size(); j += 5) {
        const auto& a = frames[i];
        const auto& b = frames[j];
        for (auto s : {Strictness::Lax, Strictness::BoxStrict, Strictness::DiamondStrict, Strictness::Strict}) {
          std::size_t brute = 0;
          std::vector<Elem> m(a.size(), 0);
          while (true) {
            if (satisfies(classify_morphism(a, b, m), s)) ++brute;
            std::size_t k = 0;
            while (k < m.size() && ++m[k] == b.size()) m[k++] = 0;
            if (k == m.size()) break;
          }
          CHECK(frame_homs(a, b, s).size() == brute);
        }
        ++pairs;
      }
    CHECK(pairs > 100);
  }
}
