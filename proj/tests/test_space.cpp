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
#include "mdual/space.hpp"
#include "support.hpp"

using namespace mdual;
using namespace mdual::testing;

namespace {

std::vector<RelationalSpace> labelled_spaces(std::size_t max_points) {
  std::vector<RelationalSpace> out;
  for (std::size_t n = 0; n <= max_points; ++n)
    for_each_space(n, false, [&](const RelationalSpace& s) { out.push_back(s); });
  return out;
}

std::vector<std::vector<Point>> all_maps(std::size_t from, std::size_t to) {
  std::vector<std::vector<Point>> out;
  if (to == 0 && from > 0) return out;
  std::vector<Point> m(from, 0);
  while (true) {
    out.push_back(m);
    std::size_t i = 0;
    while (i < from && ++m[i] == to) m[i++] = 0;
    if (i == from) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("relational-space") {
  TEST_CASE("validation examples") {
    CHECK_NOTHROW(space({"x"}, {{}, {"x"}}, {}));
    const auto s1 = load_space("s1");
    CHECK(s1.size() == 2);
    CHECK(s1.opens().size() == 3);
    try {
      space({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b", "c"}}, {});
      FAIL("missing union accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotATopology);
      CHECK(e.witnesses().size() == 2);
    }
    CHECK_THROWS_AS(space({"x"}, {{}, {"x"}}, {{"x", "q"}}), Error);
  }

  TEST_CASE("classical operators") {
    const auto empty_rel = space({"a", "b"}, {{}, {"a"}, {"a", "b"}}, {});
    for (unsigned long long m = 0; m < 4; ++m) {
      const auto u = subset_from_mask(2, m);
      CHECK(box_class(empty_rel, u) == empty_rel.all());
      CHECK(dia_class(empty_rel, u) == empty_rel.empty_set());
    }
    const auto s1 = load_space("s1");
    const auto y = points_of(s1, {"y"});
    CHECK(box_class(s1, y) == s1.all());
    CHECK(dia_class(s1, y) == s1.all());
    CHECK(dia_class(s1, s1.empty_set()) == s1.empty_set());

    CHECK(interior(s1, s1.all()) == s1.all());
    CHECK(interior(s1, points_of(s1, {"x"})) == s1.empty_set());
    CHECK(interior(s1, s1.empty_set()) == s1.empty_set());
  }

  TEST_CASE("classification examples") {
    const auto s1 = classify_space(load_space("s1"));
    CHECK(s1.usc);
    CHECK(s1.lsc);
    CHECK(s1.continuous);
    CHECK(s1.serial);
    CHECK_FALSE(s1.equivalence_space);

    const auto full = classify_space(load_space("discrete-full-2pt"));
    CHECK(full.continuous);
    CHECK(full.equivalence_space);

    const auto none = classify_space(space({"a", "b"}, {{}, {"a"}, {"a", "b"}}, {}));
    CHECK(none.usc);
    CHECK(none.lsc);
    CHECK_FALSE(none.serial);
  }

  TEST_CASE("morphism examples") {
    const auto s1 = load_space("s1");
    const auto id = classify_space_morphism(s1, s1, std::vector<Point>{0, 1});
    CHECK(id.level == MorphismLevel::PQMorphism);
    CHECK(id.open_map);

    const auto y = s1.index_of("y");
    const auto konst = classify_space_morphism(s1, s1, std::vector<Point>{y, y});
    CHECK(konst.level == MorphismLevel::PQMorphism);
    CHECK(konst.open_map);

    const auto pt = load_space("point-norel");
    const auto to_pt = classify_space_morphism(s1, pt, std::vector<Point>{0, 0});
    CHECK(to_pt.continuous);
    CHECK_FALSE(to_pt.forward);
    CHECK(to_pt.level == MorphismLevel::Continuous);
    CHECK_FALSE(to_pt.witnesses.empty());
  }

  TEST_CASE("closed, saturated and lens sets") {
    const auto s1 = load_space("s1");
    CHECK_FALSE(is_closed(s1, points_of(s1, {"y"})));
    CHECK(is_closed(s1, points_of(s1, {"x"})));
    for (const auto& u : s1.opens()) CHECK(is_saturated(s1, u));
    CHECK(is_lens(s1, s1.all()));
    CHECK(specialization_leq(s1, s1.index_of("x"), s1.index_of("y")));
    CHECK_FALSE(specialization_leq(s1, s1.index_of("y"), s1.index_of("x")));
  }

  TEST_CASE("set-level identities on every labelled space up to 3 points") {
    for (const auto& s : labelled_spaces(3)) {
      const auto n = s.size();
      for (unsigned long long a = 0; a < (1ULL << n); ++a) {
        const auto u = subset_from_mask(n, a);
        CHECK(box_class(s, u) == ~dia_class(s, ~u));
        for (unsigned long long b = 0; b < (1ULL << n); ++b) {
          const auto v = subset_from_mask(n, b);
          CHECK(box_class(s, u & v) == (box_class(s, u) & box_class(s, v)));
          CHECK(dia_class(s, u | v) == (dia_class(s, u) | dia_class(s, v)));
          if (u.is_subset_of(v)) {
            CHECK(box_class(s, u).is_subset_of(box_class(s, v)));
            CHECK(dia_class(s, u).is_subset_of(dia_class(s, v)));
          }
        }
        // Canonical lens candidate is equivalent to the existential test.
        bool exists = false;
        for (unsigned long long c = 0; c < (1ULL << n) && !exists; ++c)
          for (unsigned long long v = 0; v < (1ULL << n) && !exists; ++v) {
            const auto cc = subset_from_mask(n, c), vv = subset_from_mask(n, v);
            exists = is_closed(s, cc) && is_saturated(s, vv) && (cc & vv) == u;
          }
        CHECK(is_lens(s, u) == exists);
      }
      // The identity relation on the same topology is a continuous equivalence.
      std::vector<Subset> diag(n, Subset(n));
      for (Point x = 0; x < n; ++x) diag[x].set(x);
      const auto cls = classify_space(RelationalSpace::from_sets(s.ids(), s.opens(), diag));
      CHECK(cls.continuous);
      CHECK(cls.equivalence_space);
    }
  }

  TEST_CASE("classification levels are monotone on spaces up to 2 points") {
    const auto spaces = labelled_spaces(2);
    for (const auto& a : spaces)
      for (const auto& b : spaces)
        for (const auto& m : all_maps(a.size(), b.size())) {
          const auto cls = classify_space_morphism(a, b, m);
          if (at_least(cls, MorphismLevel::PQMorphism)) CHECK(at_least(cls, MorphismLevel::PMorphism));
          if (at_least(cls, MorphismLevel::PMorphism)) CHECK(at_least(cls, MorphismLevel::Relational));
          if (at_least(cls, MorphismLevel::Relational)) CHECK(at_least(cls, MorphismLevel::Continuous));
          CHECK(cls.continuous == at_least(cls, MorphismLevel::Continuous));
          CHECK((cls.level == MorphismLevel::PQMorphism) ==
                (cls.continuous && cls.forward && cls.back_p && cls.back_q));
        }
  }
}
