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

std::vector<RelationalSpace> spaces_up_to(std::size_t max_points, bool up_to_iso) {
  std::vector<RelationalSpace> out;
  for (std::size_t n = 0; n <= max_points; ++n)
    for_each_space(n, up_to_iso, [&](const RelationalSpace& s) { out.push_back(s); });
  return out;
}

std::vector<std::vector<Point>> continuous_maps(const RelationalSpace& a, const RelationalSpace& b) {
  std::vector<std::vector<Point>> out;
  if (b.size() == 0 && a.size() > 0) return out;
  std::vector<Point> m(a.size(), 0);
  while (true) {
    if (classify_space_morphism(a, b, m).continuous) out.push_back(m);
    std::size_t i = 0;
    while (i < m.size() && ++m[i] == b.size()) m[i++] = 0;
    if (i == m.size()) break;
  }
  return out;
}

Elem el(const ModalFrame& f, const std::string& id) { return f.lattice.index_of(id); }

}  // namespace

TEST_SUITE("omega-functor") {
  TEST_CASE("Omega of S1") {
    const auto f = omega_space(load_space("s1"));
    REQUIRE(f.size() == 3);
    const auto e = el(f, "{}"), y = el(f, "{y}"), x = el(f, "{x,y}");
    CHECK(f.lattice.leq(e, y));
    CHECK(f.lattice.leq(y, x));
    CHECK(f.box[e] == e);
    CHECK(f.box[y] == x);
    CHECK(f.box[x] == x);
    CHECK(f.dia[e] == e);
    CHECK(f.dia[y] == x);
    CHECK(f.dia[x] == x);
    CHECK(find_frame_isomorphism(f, load_frame("chain3-btt")).has_value());
  }

  TEST_CASE("Omega of an empty relation and of the full discrete space") {
    const auto none = omega_space(space({"a", "b"}, {{}, {"a"}, {"a", "b"}}, {}));
    for (Elem u = 0; u < none.size(); ++u) {
      CHECK(none.box[u] == none.lattice.top());
      CHECK(none.dia[u] == none.lattice.bottom());
    }
    const auto full = omega_space(load_space("discrete-full-2pt"));
    REQUIRE(full.size() == 4);
    for (const std::string u : {"{a}", "{b}"}) {
      CHECK(full.box[el(full, u)] == full.lattice.bottom());
      CHECK(full.dia[el(full, u)] == full.lattice.top());
    }
  }

  TEST_CASE("Omega on morphisms") {
    const auto s1 = load_space("s1");
    const auto id = omega_morphism({s1, s1, {0, 1}});
    CHECK(id.frame_class.kind == MorphismKind::Strict);
    CHECK(all_ok(id.lemma));
    CHECK(id.morphism.map == identity_table(3));

    const auto pt = load_space("point-norel");
    CHECK_NOTHROW(omega_morphism({s1, pt, {0, 0}}));
    const auto two = space({"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}}, {});
    try {
      omega_map(s1, two, std::vector<Point>{0, 1});
      FAIL("discontinuous map accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotContinuous);
    }
  }

  TEST_CASE("class report examples") {
    const auto s1 = omega_class_report(load_space("s1"));
    CHECK(s1.frame.convex);
    CHECK(s1.frame.serial);
    CHECK(all_ok(s1.implications));
    const auto full = omega_class_report(load_space("discrete-full-2pt"));
    CHECK(full.frame.equivalence);
  }

  TEST_CASE("implications on every labelled space up to 3 points") {
    for (const auto& s : spaces_up_to(3, false)) {
      const auto f = omega_space(s);
      for (int ax = 4; ax <= 7; ++ax) CHECK(axiom_holds(f, ax));
      const auto r = omega_class_report(s);
      for (const auto& c : r.implications) {
        CAPTURE(c.name);
        CHECK(c.ok());
      }
    }
  }

  TEST_CASE("morphism classes and functoriality on spaces up to 2 points") {
    const auto spaces = spaces_up_to(2, true);
    for (const auto& a : spaces)
      for (const auto& b : spaces)
        for (const auto& f : continuous_maps(a, b)) {
          const auto om = omega_morphism({a, b, f});
          for (const auto& c : om.lemma) {
            CAPTURE(c.name);
            CHECK(c.ok());
          }
          for (const auto& c : spaces)
            for (const auto& g : continuous_maps(b, c)) {
              std::vector<Point> gf(a.size());
              for (Point x = 0; x < a.size(); ++x) gf[x] = g[f[x]];
              const auto og = omega_map(b, c, g);
              const auto of = omega_map(a, b, f);
              const auto ogf = omega_map(a, c, gf);
              for (Elem u = 0; u < ogf.size(); ++u) CHECK(ogf[u] == of[og[u]]);
            }
        }
  }
}
