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

#include "mdual/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace mdual {

using Kind = Formula::Kind;

FormulaPtr Formula::var(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Var;
  f->name = std::move(name);
  return f;
}

FormulaPtr Formula::constant(bool value) {
  auto f = std::make_shared<Formula>();
  f->kind = value ? Kind::True : Kind::False;
  return f;
}

FormulaPtr Formula::binary(Kind kind, FormulaPtr lhs, FormulaPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

FormulaPtr Formula::unary(Kind kind, FormulaPtr operand) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(operand);
  return f;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  auto same = [](const FormulaPtr& x, const FormulaPtr& y) {
    return (!x && !y) || (x && y && *x == *y);
  };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

namespace {

enum class Tok { Ident, True, False, Box, Dia, And, Or, Imp, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const auto l = line, c = col;
    if (ch >= 'a' && ch <= 'z') {
      std::size_t j = i;
      while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
                              std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word(s.substr(i, j - i));
      Tok kind = word == "true" ? Tok::True
                 : word == "false" ? Tok::False
                 : word == "box" ? Tok::Box
                 : word == "dia" ? Tok::Dia
                                 : Tok::Ident;
      out.push_back({kind, word, l, c});
      advance(j - i);
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Imp, "->", l, c});
      advance(2);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw SyntaxError(l, c, "a formula token", "'" + std::string(1, ch) + "'");
    }
    out.push_back({kind, std::string(1, ch), l, c});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  FormulaPtr parse() {
    auto f = imp();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw SyntaxError(peek().line, peek().column, what, describe(peek()));
  }

  FormulaPtr imp() {
    auto lhs = disj();
    if (accept(Tok::Imp)) return Formula::binary(Kind::Imp, lhs, imp());
    return lhs;
  }
  FormulaPtr disj() {
    auto f = conj();
    while (accept(Tok::Or)) f = Formula::binary(Kind::Or, f, conj());
    return f;
  }
  FormulaPtr conj() {
    auto f = unary();
    while (accept(Tok::And)) f = Formula::binary(Kind::And, f, unary());
    return f;
  }
  FormulaPtr unary() {
    if (accept(Tok::Box)) return Formula::unary(Kind::Box, unary());
    if (accept(Tok::Dia)) return Formula::unary(Kind::Dia, unary());
    return atom();
  }
  FormulaPtr atom() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        ++pos_;
        return Formula::var(t.text);
      case Tok::True:
        ++pos_;
        return Formula::constant(true);
      case Tok::False:
        ++pos_;
        return Formula::constant(false);
      case Tok::LParen: {
        ++pos_;
        auto f = imp();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw SyntaxError(t.line, t.column, "a variable, constant, 'box', 'dia' or '('",
                          describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Kind k) {
  switch (k) {
    case Kind::Imp: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Box:
    case Kind::Dia: return 4;
    default: return 5;
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string to_string(const Formula& f) {
  auto wrap = [](const Formula& g, bool paren) {
    auto s = to_string(g);
    return paren ? "(" + s + ")" : s;
  };
  const int p = precedence(f.kind);
  switch (f.kind) {
    case Kind::Var: return f.name;
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Box: return "box " + wrap(*f.lhs, precedence(f.lhs->kind) < p);
    case Kind::Dia: return "dia " + wrap(*f.lhs, precedence(f.lhs->kind) < p);
    case Kind::Imp:
      return wrap(*f.lhs, precedence(f.lhs->kind) <= p) + " -> " +
             wrap(*f.rhs, precedence(f.rhs->kind) < p);
    case Kind::And:
    case Kind::Or:
      return wrap(*f.lhs, precedence(f.lhs->kind) < p) + (f.kind == Kind::And ? " & " : " | ") +
             wrap(*f.rhs, precedence(f.rhs->kind) <= p);
  }
  return "";
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  if (f.lhs) d = std::max(d, depth(*f.lhs) + 1);
  if (f.rhs) d = std::max(d, depth(*f.rhs) + 1);
  return d;
}

void collect_variables(const Formula& f, std::vector<std::string>& out) {
  if (f.kind == Kind::Var) {
    if (std::find(out.begin(), out.end(), f.name) == out.end()) out.push_back(f.name);
    return;
  }
  if (f.lhs) collect_variables(*f.lhs, out);
  if (f.rhs) collect_variables(*f.rhs, out);
}

Model make_model(RelationalSpace space, const std::map<std::string, std::vector<std::string>>& v) {
  Model m{std::move(space), {}};
  for (const auto& [name, pts] : v) {
    Subset u(m.space.size());
    for (const auto& p : pts) u.set(m.space.index_of(p));
    if (!m.space.is_open(u))
      throw Error(ErrorKind::InvalidInput,
                  "valuation of '" + name + "' is " + set_name(m.space, u) + ", which is not open",
                  {name});
    m.valuation.emplace(name, std::move(u));
  }
  return m;
}

namespace {

void reject_implication(const EvalOptions& options) {
  if (!options.allow_implication)
    throw Error(ErrorKind::InvalidInput, "implication is disabled");
}

Subset heyting(const RelationalSpace& s, const Subset& a, const Subset& b) {
  return interior(s, ~a | b);
}

Subset eval(const RelationalSpace& s, const Valuation& v, const Formula& f,
            const EvalOptions& options) {
  switch (f.kind) {
    case Kind::Var: {
      auto it = v.find(f.name);
      if (it == v.end())
        throw Error(ErrorKind::UndeclaredVariable, "variable '" + f.name + "' has no valuation",
                    {f.name});
      return it->second;
    }
    case Kind::True: return s.all();
    case Kind::False: return s.empty_set();
    case Kind::And: return eval(s, v, *f.lhs, options) & eval(s, v, *f.rhs, options);
    case Kind::Or: return eval(s, v, *f.lhs, options) | eval(s, v, *f.rhs, options);
    case Kind::Imp:
      reject_implication(options);
      return heyting(s, eval(s, v, *f.lhs, options), eval(s, v, *f.rhs, options));
    case Kind::Box: return interior(s, box_class(s, eval(s, v, *f.lhs, options)));
    case Kind::Dia: return interior(s, dia_class(s, eval(s, v, *f.lhs, options)));
  }
  return s.empty_set();
}

}  // namespace

Subset evaluate(const Model& model, const Formula& f, const EvalOptions& options) {
  return eval(model.space, model.valuation, f, options);
}

bool satisfies(const Model& model, Point x, const Formula& f, const EvalOptions& options) {
  if (x >= model.space.size())
    throw Error(ErrorKind::UnknownPoint, "point index out of range", {std::to_string(x)});
  return evaluate(model, f, options).test(x);
}

bool satisfies(const Model& model, std::string_view point, const Formula& f,
               const EvalOptions& options) {
  return satisfies(model, model.space.index_of(point), f, options);
}

Elem evaluate_in_frame(const ModalFrame& frame, const std::map<std::string, Elem>& v,
                       const Formula& f, const EvalOptions& options) {
  const auto& l = frame.lattice;
  auto rec = [&](const Formula& g) { return evaluate_in_frame(frame, v, g, options); };
  switch (f.kind) {
    case Kind::Var: {
      auto it = v.find(f.name);
      if (it == v.end())
        throw Error(ErrorKind::UndeclaredVariable, "variable '" + f.name + "' has no valuation",
                    {f.name});
      return it->second;
    }
    case Kind::True: return l.top();
    case Kind::False: return l.bottom();
    case Kind::And: return l.meet(rec(*f.lhs), rec(*f.rhs));
    case Kind::Or: return l.join(rec(*f.lhs), rec(*f.rhs));
    case Kind::Imp: {
      reject_implication(options);
      const Elem a = rec(*f.lhs), b = rec(*f.rhs);
      Subset s(l.size());
      for (Elem c = 0; c < l.size(); ++c)
        if (l.leq(l.meet(c, a), b)) s.set(c);
      return l.big_join(s);
    }
    case Kind::Box: return frame.box[rec(*f.lhs)];
    case Kind::Dia: return frame.dia[rec(*f.lhs)];
  }
  return l.bottom();
}

BisimResult bisim_invariance_check(const SpaceMorphism& f, const Valuation& vs,
                                   const Valuation& vt, std::size_t max_depth,
                                   const EvalOptions& options) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  if (f.map.size() != src.size())
    throw Error(ErrorKind::InvalidInput, "map must cover every source point");
  for (auto y : f.map)
    if (y >= tgt.size()) throw Error(ErrorKind::UnknownPoint, "map value out of range");
  const auto cls = classify_space_morphism(f);
  if (!at_least(cls, MorphismLevel::PQMorphism) || !cls.open_map) {
    std::string detail = "needs an open pq-morphism, map is " + std::string(to_string(cls.level)) +
                         (cls.open_map ? "" : " and not open");
    if (!cls.witnesses.empty()) detail += ": " + cls.witnesses.front();
    throw Error(ErrorKind::PreconditionViolated, detail, cls.witnesses);
  }
  for (const auto& [name, u] : vs) {
    auto it = vt.find(name);
    if (it == vt.end())
      throw Error(ErrorKind::PreconditionViolated, "variable '" + name + "' missing in target",
                  {name});
    if (preimage(f.map, src.size(), it->second) != u)
      throw Error(ErrorKind::PreconditionViolated,
                  "valuations disagree on '" + name + "': preimage of " +
                      set_name(tgt, it->second) + " is not " + set_name(src, u),
                  {name});
  }
  for (const auto& [name, u] : vt)
    if (!vs.contains(name))
      throw Error(ErrorKind::PreconditionViolated, "variable '" + name + "' missing in source",
                  {name});

  struct Entry {
    Subset s;
    Subset t;
    FormulaPtr repr;
  };
  std::vector<Entry> all;
  std::set<std::pair<Subset, Subset>> seen;
  auto add = [&](FormulaPtr g) {
    Subset s = eval(src, vs, *g, options);
    Subset t = eval(tgt, vt, *g, options);
    if (seen.emplace(s, t).second) all.push_back({std::move(s), std::move(t), std::move(g)});
  };
  add(Formula::constant(true));
  add(Formula::constant(false));
  for (const auto& [name, u] : vs) add(Formula::var(name));

  BisimResult out;
  // Level d holds one representative per denotation pair of depth ≤ d.
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const auto size = all.size();
    for (std::size_t i = 0; i < size; ++i) {
      add(Formula::unary(Kind::Box, all[i].repr));
      add(Formula::unary(Kind::Dia, all[i].repr));
      for (std::size_t j = 0; j < size; ++j) {
        add(Formula::binary(Kind::And, all[i].repr, all[j].repr));
        add(Formula::binary(Kind::Or, all[i].repr, all[j].repr));
        if (options.allow_implication) add(Formula::binary(Kind::Imp, all[i].repr, all[j].repr));
      }
    }
    if (all.size() == size) break;
  }
  out.depth = max_depth;
  out.distinct_formulas = all.size();
  for (const auto& e : all) {
    const Subset pulled = preimage(f.map, src.size(), e.t);
    if (pulled != e.s) {
      out.pass = false;
      out.counterexample = to_string(*e.repr);
      out.point = src.id((pulled ^ e.s).find_first());
      break;
    }
  }
  return out;
}

}  // namespace mdual
