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

#ifndef MDUAL_FORMULA_HPP
#define MDUAL_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mdual/error.hpp"
#include "mdual/modal_frame.hpp"
#include "mdual/space.hpp"

namespace mdual {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Var, True, False, And, Or, Imp, Box, Dia };

  Kind kind = Kind::True;
  std::string name;  // Var only
  FormulaPtr lhs;    // And/Or/Imp, and the operand of Box/Dia
  FormulaPtr rhs;

  static FormulaPtr var(std::string name);
  static FormulaPtr constant(bool value);
  static FormulaPtr binary(Kind kind, FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr unary(Kind kind, FormulaPtr operand);
};

bool operator==(const Formula& a, const Formula& b);

// Grammar, loosest first:
//   imp   := or ("->" imp)?
//   or    := and ("|" and)*
//   and   := unary ("&" unary)*
//   unary := "box" unary | "dia" unary | atom
//   atom  := [a-z][a-z0-9_]* | "true" | "false" | "(" imp ")"
// Throws SyntaxError with a 1-based line and column.
FormulaPtr parse_formula(std::string_view text);

// Minimal parenthesization; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

std::size_t depth(const Formula& f);
void collect_variables(const Formula& f, std::vector<std::string>& out);

using Valuation = std::map<std::string, Subset>;

// A relational space with every variable sent to an open set.
struct Model {
  RelationalSpace space;
  Valuation valuation;
};

// Throws UnknownPoint, or InvalidInput when an image is not open.
Model make_model(RelationalSpace space, const std::map<std::string, std::vector<std::string>>& v);

struct EvalOptions {
  bool allow_implication = true;  // Heyting implication of the open sets
};

// ⟦φ⟧ ⊆ X, always open. Throws UndeclaredVariable.
Subset evaluate(const Model& model, const Formula& f, const EvalOptions& options = {});
bool satisfies(const Model& model, Point x, const Formula& f, const EvalOptions& options = {});
bool satisfies(const Model& model, std::string_view point, const Formula& f,
               const EvalOptions& options = {});

// The same semantics in an abstract modal frame, implication as the
// relative pseudo-complement.
Elem evaluate_in_frame(const ModalFrame& frame, const std::map<std::string, Elem>& valuation,
                       const Formula& f, const EvalOptions& options = {});

struct BisimResult {
  bool pass = true;
  std::size_t depth = 0;
  std::size_t distinct_formulas = 0;  // semantic classes examined
  std::string counterexample;         // formula text, when pass is false
  std::string point;                  // source point where transfer fails
};

// For an open continuous pq-morphism f with f⁻¹∘v_target = v_source,
// checks x ⊨ φ ⟺ f(x) ⊨ φ for every formula up to `depth`, one
// representative per pair of denotations. Throws PreconditionViolated.
BisimResult bisim_invariance_check(const SpaceMorphism& f, const Valuation& source,
                                   const Valuation& target, std::size_t depth,
                                   const EvalOptions& options = {});

}  // namespace mdual

#endif  // MDUAL_FORMULA_HPP
