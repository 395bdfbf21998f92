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

#include <random>

#include "doctest.h"
#include "mdual/enumerate.hpp"
#include "mdual/formula.hpp"
#include "mdual/omega.hpp"
#include "support.hpp"

using namespace mdual;
using namespace mdual::testing;

namespace {

using K = Formula::Kind;

FormulaPtr v(const char* n) { return Formula::var(n); }

FormulaPtr random_formula(std::mt19937& rng, int depth, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 7);
  switch (pick(rng)) {
    case 0:
      return Formula::var(vars[rng() % vars.size()]);
    case 1:
      return Formula::constant(true);
    case 2:
      return Formula::constant(false);
    case 3:
      return Formula::binary(K::And, random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    case 4:
      return Formula::binary(K::Or, random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    case 5:
      return Formula::binary(K::Imp, random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    case 6:
      return Formula::unary(K::Box, random_formula(rng, depth - 1, vars));
    default:
      return Formula::unary(K::Dia, random_formula(rng, depth - 1, vars));
  }
}

Model s1_model() {
  return make_model(load_space("s1"), {{"p", {"y"}}});
}

}  // namespace

TEST_SUITE("formula-lang") {
  TEST_CASE("parser examples") {
    CHECK(*parse_formula("box p & dia q") ==
          *Formula::binary(K::And, Formula::unary(K::Box, v("p")), Formula::unary(K::Dia, v("q"))));
    CHECK(*parse_formula("box (p | q)") == *Formula::unary(K::Box, Formula::binary(K::Or, v("p"), v("q"))));
    CHECK(*parse_formula("p -> q -> r") ==
          *Formula::binary(K::Imp, v("p"), Formula::binary(K::Imp, v("q"), v("r"))));
    CHECK(*parse_formula("p | q & r") == *Formula::binary(K::Or, v("p"), Formula::binary(K::And, v("q"), v("r"))));
    CHECK(*parse_formula("true") == *Formula::constant(true));
  }

  TEST_CASE("syntax errors carry positions") {
    try {
      parse_formula("box p &\n  (q | )");
      FAIL("accepted");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 8);
      CHECK(e.kind() == ErrorKind::SyntaxError);
    }
    CHECK_THROWS_AS(parse_formula(""), SyntaxError);
    CHECK_THROWS_AS(parse_formula("p q"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("P"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("(p"), SyntaxError);
  }

  TEST_CASE("printing round-trips") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
      const auto f = random_formula(rng, 4, {"p", "q", "r1"});
      CAPTURE(to_string(*f));
      CHECK(*parse_formula(to_string(*f)) == *f);
    }
    CHECK(depth(*parse_formula("box (p & dia q)")) == 3);
  }

  TEST_CASE("evaluation examples") {
    const auto m = s1_model();
    const auto& s = m.space;
    CHECK(evaluate(m, *parse_formula("box p")) == s.all());
    CHECK(evaluate(m, *parse_formula("dia false")) == s.empty_set());
    CHECK(evaluate(m, *parse_formula("box true")) == s.all());
    CHECK(satisfies(m, "x", *parse_formula("box p")));
    CHECK(satisfies(m, "x", *parse_formula("true")));
    CHECK_FALSE(satisfies(m, "y", *parse_formula("false")));
    CHECK_FALSE(satisfies(m, "x", *parse_formula("p")));
    // Heyting: p -> false is the interior of {x}, which is empty.
    CHECK(evaluate(m, *parse_formula("p -> false")) == s.empty_set());
  }

  TEST_CASE("evaluation errors") {
    const auto m = s1_model();
    try {
      evaluate(m, *parse_formula("q"));
      FAIL("undeclared variable accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UndeclaredVariable);
    }
    CHECK_THROWS_AS(satisfies(m, "z", *parse_formula("p")), Error);
    CHECK_THROWS_AS(evaluate(m, *parse_formula("p -> p"), EvalOptions{false}), Error);
    CHECK_THROWS_AS(make_model(load_space("s1"), {{"p", {"x"}}}), Error);
  }

  TEST_CASE("bisimulation examples") {
    const auto s1 = load_space("s1");
    const Valuation vs{{"p", points_of(s1, {"y"})}, {"q", s1.all()}};
    const auto id = bisim_invariance_check({s1, s1, {0, 1}}, vs, vs, 3);
    CHECK(id.pass);
    CHECK(id.depth == 3);

    const auto y = s1.index_of("y");
    const Valuation src{{"p", s1.all()}}, tgt{{"p", points_of(s1, {"y"})}};
    CHECK(bisim_invariance_check({s1, s1, {y, y}}, src, tgt, 3).pass);

    try {
      bisim_invariance_check({s1, s1, {y, y}}, tgt, tgt, 3);
      FAIL("incompatible valuations accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PreconditionViolated);
    }

    const auto loop = load_space("loop"), fork = load_space("fork");
    try {
      bisim_invariance_check({loop, fork, {0}}, {{"p", loop.all()}}, {{"p", points_of(fork, {"a"})}}, 3);
      FAIL("p-morphism accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PreconditionViolated);
      REQUIRE_FALSE(e.witnesses().empty());
      CHECK(e.witnesses().front().find("q:") == 0);
    }
  }

  TEST_CASE("semantic properties on spaces up to 2 points") {
    std::mt19937 rng(11);
    std::vector<RelationalSpace> spaces;
    for (std::size_t n = 1; n <= 2; ++n)
      for_each_space(n, true, [&](const RelationalSpace& s) { spaces.push_back(s); });
    for (const auto& s : spaces) {
      const auto omega = omega_space(s);
      for (const auto& p : s.opens())
        for (const auto& q : s.opens()) {
          const Model m{s, {{"p", p}, {"q", q}}};
          const std::map<std::string, Elem> fv{{"p", s.open_position(p)}, {"q", s.open_position(q)}};
          for (int i = 0; i < 40; ++i) {
            const auto f = random_formula(rng, 4, {"p", "q"});
            const auto g = random_formula(rng, 3, {"p", "q"});
            const auto den = evaluate(m, *f);
            CHECK(s.is_open(den));
            CHECK(s.opens()[evaluate_in_frame(omega, fv, *f)] == den);
            const auto both = evaluate(m, *Formula::binary(K::And, f, g));
            const auto either = evaluate(m, *Formula::binary(K::Or, f, g));
            CHECK(both.is_subset_of(den));
            CHECK(den.is_subset_of(either));
          }
        }
    }
  }
}
