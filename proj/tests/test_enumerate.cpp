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
#include "mdual/sweep.hpp"
#include "support.hpp"

using namespace mdual;

TEST_SUITE("enumeration") {
  TEST_CASE("distributive lattices by size") {
    std::vector<std::size_t> by_size(9, 0);
    for (const auto& l : distributive_lattices(8)) ++by_size[l.size()];
    CHECK(by_size == std::vector<std::size_t>{0, 1, 1, 1, 2, 3, 5, 8, 15});
  }

  TEST_CASE("topologies") {
    const std::vector<std::size_t> labelled{1, 1, 4, 29, 355}, classes{1, 1, 3, 9, 33};
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK(topologies(n, false).size() == labelled[n]);
      CHECK(topologies(n, true).size() == classes[n]);
    }
  }

  TEST_CASE("labelled spaces are topologies times relations") {
    for (std::size_t n = 0; n <= 2; ++n) {
      std::size_t count = 0;
      for_each_space(n, false, [&](const RelationalSpace&) { ++count; });
      CHECK(count == topologies(n, false).size() * (std::size_t{1} << (n * n)));
    }
    CHECK_THROWS_AS(for_each_space(5, true, [](const RelationalSpace&) {}), Error);
  }

  TEST_CASE("modal frames on the two-element lattice") {
    const auto two = testing::chain({"bot", "top"});
    // box fixes top; dia fixes bot; axiom 6 removes box = const top with dia = id.
    CHECK(modal_frames(two).size() == 3);
  }

  TEST_CASE("sweep bounds") {
    SweepOptions empty;
    empty.max_lattice = 0;
    empty.max_points = 0;
    const auto r = sweep(empty);
    CHECK(r.frames == 0);
    CHECK(r.pass());

    SweepOptions big;
    big.max_lattice = kMaxSweepLattice + 1;
    CHECK_THROWS_AS(sweep(big), Error);

    SweepOptions two;
    two.max_lattice = 2;
    two.max_points = 2;
    const auto t = sweep(two);
    CHECK(t.pass());
    CHECK(t.suites.at("spatial/relsp").failed == 0);
    CHECK(t.suites.at("spatial/relspq").failed == 0);
  }
}
