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

#include "mdual/modal_frame.hpp"

#include <algorithm>

namespace mdual {

namespace {

std::optional<Violation> monotone_violation(const FiniteLattice& l, std::span<const Elem> op,
                                            const char* rule) {
  for (Elem a = 0; a < l.size(); ++a)
    for (auto b = l.up(a).find_first(); b != Subset::npos; b = l.up(a).find_next(b))
      if (!l.leq(op[a], op[b])) return Violation{rule, {a, b}};
  return std::nullopt;
}

std::string ids_of(const FiniteLattice& l, const std::vector<Elem>& xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ", ";
    out += "'" + l.id(x) + "'";
  }
  return out;
}

}  // namespace

std::optional<Violation> axiom_violation(const FiniteLattice& l, std::span<const Elem> box,
                                         std::span<const Elem> dia, int axiom) {
  const auto n = l.size();
  const Elem top = l.top();
  const Elem bot = l.bottom();
  auto unary = [&](auto&& holds) -> std::optional<Violation> {
    for (Elem a = 0; a < n; ++a)
      if (!holds(a)) return Violation{std::to_string(axiom), {a}};
    return std::nullopt;
  };
  auto binary = [&](auto&& holds) -> std::optional<Violation> {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (!holds(a, b)) return Violation{std::to_string(axiom), {a, b}};
    return std::nullopt;
  };
  switch (axiom) {
    case 4:
      if (!l.leq(top, box[top])) return Violation{"4", {top}};
      return std::nullopt;
    case 5:
      return binary([&](Elem a, Elem b) { return l.leq(l.meet(box[a], box[b]), box[l.meet(a, b)]); });
    case 6:
      return binary([&](Elem a, Elem b) { return l.leq(l.meet(box[a], dia[b]), dia[l.meet(a, b)]); });
    case 7:
      if (!l.leq(dia[bot], bot)) return Violation{"7", {bot}};
      return std::nullopt;
    case 8:
      return binary([&](Elem a, Elem b) { return l.leq(dia[l.join(a, b)], l.join(dia[a], dia[b])); });
    case 9:
      return binary([&](Elem a, Elem b) { return l.leq(box[l.join(a, b)], l.join(box[a], dia[b])); });
    case 10: return unary([&](Elem a) { return l.leq(box[a], dia[a]); });
    case 11: return unary([&](Elem a) { return l.leq(box[a], a); });
    case 12: return unary([&](Elem a) { return l.leq(a, dia[a]); });
    case 13: return unary([&](Elem a) { return l.leq(box[a], box[box[a]]); });
    case 14: return unary([&](Elem a) { return l.leq(dia[dia[a]], dia[a]); });
    case 15: return unary([&](Elem a) { return l.leq(dia[box[a]], a); });
    case 16: return unary([&](Elem a) { return l.leq(a, box[dia[a]]); });
    default:
      throw Error(ErrorKind::InvalidInput, "no axiom with id " + std::to_string(axiom));
  }
}

bool axiom_holds(const ModalFrame& frame, int axiom) {
  return !axiom_violation(frame.lattice, frame.box, frame.dia, axiom).has_value();
}

std::vector<Violation> modal_frame_violations(const FiniteLattice& l, std::span<const Elem> box,
                                              std::span<const Elem> dia) {
  std::vector<Violation> out;
  const auto n = l.size();
  for (const auto& [op, rule] : {std::pair{box, "monotone-box"}, std::pair{dia, "monotone-dia"}})
    for (Elem a = 0; a < n; ++a)
      for_each_member(l.up(a), [&](Elem b) {
        if (!l.leq(op[a], op[b])) out.push_back(Violation{rule, {a, b}});
      });
  for (int axiom = 4; axiom <= 7; ++axiom) {
    // Gather every violating tuple, not only the first.
    const bool two = axiom == 5 || axiom == 6;
    if (!two) {
      if (auto v = axiom_violation(l, box, dia, axiom)) out.push_back(*v);
      continue;
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem m = l.meet(a, b);
        const bool ok = axiom == 5 ? l.leq(l.meet(box[a], box[b]), box[m])
                                   : l.leq(l.meet(box[a], dia[b]), dia[m]);
        if (!ok) out.push_back(Violation{std::to_string(axiom), {a, b}});
      }
  }
  return out;
}

ModalFrame validate_modal_frame(FiniteLattice lattice, std::vector<Elem> box,
                                std::vector<Elem> dia) {
  const auto n = lattice.size();
  if (box.size() != n || dia.size() != n)
    throw Error(ErrorKind::InvalidInput, "operator tables must be total over the elements");
  for (auto x : box)
    if (x >= n) throw Error(ErrorKind::UnknownElement, "box table value out of range");
  for (auto x : dia)
    if (x >= n) throw Error(ErrorKind::UnknownElement, "dia table value out of range");
  auto violations = modal_frame_violations(lattice, box, dia);
  if (!violations.empty()) {
    const auto& v = violations.front();
    std::vector<std::string> names;
    for (auto w : v.witness) names.push_back(lattice.id(w));
    if (v.rule.starts_with("monotone")) {
      const char* op = v.rule == "monotone-box" ? "box" : "dia";
      names.insert(names.begin(), op);
      throw Error(ErrorKind::NotMonotone,
                  std::string(op) + " is not monotone at " + ids_of(lattice, v.witness), names);
    }
    names.insert(names.begin(), v.rule);
    throw Error(ErrorKind::AxiomViolation,
                "axiom (" + v.rule + ") fails at " + ids_of(lattice, v.witness) + " (" +
                    std::to_string(violations.size()) + " violation(s) in total)",
                names);
  }
  return ModalFrame{std::move(lattice), std::move(box), std::move(dia)};
}

bool op_is_compact(const FiniteLattice& l, std::span<const Elem> op) {
  const Subset k = compacts(l);
  for (auto a = k.find_first(); a != Subset::npos; a = k.find_next(a))
    if (!k.test(op[a])) return false;
  return true;
}

bool op_is_continuous(const FiniteLattice& l, std::span<const Elem> op) {
  bool ok = true;
  for_each_directed_subset(l, [&](const Subset& s) {
    if (!ok) return;
    Elem image = l.bottom();
    for_each_member(s, [&](Elem a) { image = l.join(image, op[a]); });
    if (op[l.big_join(s)] != image) ok = false;
  });
  return ok;
}

bool is_modally_spectral(const ModalFrame& f) {
  return is_spectral(f.lattice) && op_is_compact(f.lattice, f.box) &&
         op_is_compact(f.lattice, f.dia) && op_is_continuous(f.lattice, f.box) &&
         op_is_continuous(f.lattice, f.dia);
}

FrameClass classify_frame(const ModalFrame& f) {
  FrameClass c;
  for (int ax = kFirstAxiom; ax <= kLastAxiom; ++ax) c.axioms[ax] = axiom_holds(f, ax);
  const bool monotone = !monotone_violation(f.lattice, f.box, "monotone-box") &&
                        !monotone_violation(f.lattice, f.dia, "monotone-dia");
  c.modal = monotone && c.axioms[4] && c.axioms[5] && c.axioms[6] && c.axioms[7];
  c.lower = c.modal && c.axioms[8];
  c.convex = c.lower && c.axioms[9];
  c.serial = c.modal && c.axioms[10];
  c.equivalence = c.modal;
  for (int ax = 11; ax <= 16; ++ax) c.equivalence = c.equivalence && c.axioms[ax];
  c.modally_spectral = is_modally_spectral(f);
  return c;
}

std::string_view to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::NotMorphism: return "not_morphism";
    case MorphismKind::Lax: return "lax";
    case MorphismKind::BoxStrict: return "box_strict";
    case MorphismKind::DiamondStrict: return "diamond_strict";
    case MorphismKind::Strict: return "strict";
  }
  return "?";
}

std::string_view to_string(Strictness s) {
  switch (s) {
    case Strictness::Lax: return "lax";
    case Strictness::BoxStrict: return "box_strict";
    case Strictness::DiamondStrict: return "diamond_strict";
    case Strictness::Strict: return "strict";
  }
  return "?";
}

bool satisfies(const MorphismClass& cls, Strictness required) {
  if (cls.kind == MorphismKind::NotMorphism) return false;
  switch (required) {
    case Strictness::Lax: return true;
    case Strictness::BoxStrict: return cls.box_strict();
    case Strictness::DiamondStrict: return cls.dia_strict();
    case Strictness::Strict: return cls.box_strict() && cls.dia_strict();
  }
  return false;
}

bool preserves_frame_structure(const FiniteLattice& s, const FiniteLattice& t,
                               std::span<const Elem> f, std::string* detail,
                               std::vector<Elem>* witness) {
  auto fail = [&](std::string msg, std::vector<Elem> w) {
    if (detail) *detail = std::move(msg);
    if (witness) *witness = std::move(w);
    return false;
  };
  if (f.size() != s.size()) return fail("map is not total", {});
  for (auto x : f)
    if (x >= t.size()) return fail("map value out of range", {});
  if (f[s.top()] != t.top()) return fail("top not preserved", {s.top()});
  if (f[s.bottom()] != t.bottom()) return fail("empty join not preserved", {s.bottom()});
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = a + 1; b < s.size(); ++b) {
      if (f[s.meet(a, b)] != t.meet(f[a], f[b])) return fail("meet not preserved", {a, b});
      if (f[s.join(a, b)] != t.join(f[a], f[b])) return fail("join not preserved", {a, b});
    }
  return true;
}

MorphismClass classify_morphism(const ModalFrame& source, const ModalFrame& target,
                                std::span<const Elem> f) {
  MorphismClass c;
  c.frame_morphism =
      preserves_frame_structure(source.lattice, target.lattice, f, &c.detail, &c.witness);
  if (!c.frame_morphism) return c;
  const auto& t = target.lattice;
  c.box_lax = c.dia_lax = c.box_reverse = c.dia_reverse = true;
  auto note = [&](const char* what, Elem a) {
    if (c.detail.empty()) {
      c.detail = what;
      c.witness = {a};
    }
  };
  for (Elem a = 0; a < source.size(); ++a) {
    const Elem fb = f[source.box[a]], bf = target.box[f[a]];
    const Elem fd = f[source.dia[a]], df = target.dia[f[a]];
    if (!t.leq(fb, bf)) c.box_lax = false, note("f(□a) ≰ □f(a)", a);
    if (!t.leq(fd, df)) c.dia_lax = false, note("f(◇a) ≰ ◇f(a)", a);
    if (!t.leq(bf, fb)) c.box_reverse = false;
    if (!t.leq(df, fd)) c.dia_reverse = false;
  }
  if (!c.box_lax || !c.dia_lax) return c;
  c.detail.clear();
  c.witness.clear();
  if (c.box_reverse && c.dia_reverse) c.kind = MorphismKind::Strict;
  else if (c.box_reverse) c.kind = MorphismKind::BoxStrict;
  else if (c.dia_reverse) c.kind = MorphismKind::DiamondStrict;
  else c.kind = MorphismKind::Lax;
  return c;
}

PrincipalFilter canonical_filter(const ModalFrame& f, Character p) {
  Subset s(f.size());
  for (Elem c = 0; c < f.size(); ++c)
    if (p(f.lattice, f.box[c])) s.set(c);
  return principal_filter(f.lattice, s);
}

Elem canonical_element(const ModalFrame& f, Character p) {
  Subset s(f.size());
  for (Elem c = 0; c < f.size(); ++c)
    if (!p(f.lattice, f.dia[c])) s.set(c);
  return f.lattice.big_join(s);
}

bool is_replete(const ModalFrame& f, Character p) {
  return !p(f.lattice, f.dia[canonical_element(f, p)]);
}

bool frame_is_replete(const ModalFrame& f) {
  for (auto p : characters(f.lattice))
    if (!is_replete(f, p)) return false;
  return true;
}

namespace {

std::string set_id(const FiniteLattice& l, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](Elem a) {
    if (!first) out += ",";
    out += l.id(a);
    first = false;
  });
  return out + "}";
}

}  // namespace

IdealCompletion ideal_completion(const ModalFrame& base) {
  const auto& l = base.lattice;
  auto violations = modal_frame_violations(l, base.box, base.dia);
  if (!violations.empty())
    throw Error(ErrorKind::AxiomViolation,
                "base is not a modal distributive lattice: rule " + violations.front().rule,
                {violations.front().rule});

  IdealCompletion out;
  out.ideals = all_ideals(l);
  const auto m = out.ideals.size();
  std::map<Subset, Elem> index;
  std::vector<std::string> ids;
  for (Elem i = 0; i < m; ++i) {
    index.emplace(out.ideals[i], i);
    ids.push_back(set_id(l, out.ideals[i]));
  }
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      if (out.ideals[i].is_subset_of(out.ideals[j])) order.emplace_back(i, j);
  auto lattice = FiniteLattice::from_order(std::move(ids), order);

  auto induced = [&](const std::vector<Elem>& op) {
    std::vector<Elem> table(m);
    for (Elem i = 0; i < m; ++i) {
      Subset image(l.size());
      for_each_member(out.ideals[i], [&](Elem a) { image.set(op[a]); });
      auto it = index.find(l.down_closure(image));
      if (it == index.end())
        throw Error(ErrorKind::NoWitness, "induced operator image is not an ideal");
      table[i] = it->second;
    }
    return table;
  };
  out.frame = validate_modal_frame(std::move(lattice), induced(base.box), induced(base.dia));

  out.unit.resize(l.size());
  for (Elem a = 0; a < l.size(); ++a) out.unit[a] = index.at(l.down(a));
  out.unit_class = classify_morphism(base, out.frame, out.unit);
  Subset hit(m);
  for (auto u : out.unit) hit.set(u);
  out.unit_is_iso = hit.all() && m == l.size() && out.unit_class.kind == MorphismKind::Strict;
  out.modally_spectral = is_modally_spectral(out.frame);
  return out;
}

bool CompactReflection::transfer_agrees() const {
  return std::all_of(transfer.begin(), transfer.end(),
                     [](const AxiomTransfer& t) { return t.on_frame == t.on_compacts; });
}

CompactReflection compacts_reflection(const ModalFrame& f) {
  const auto& l = f.lattice;
  CompactReflection out;
  const Subset k = compacts(l);
  out.compacts = members(k);
  if (!op_is_compact(l, f.box) || !op_is_compact(l, f.dia))
    throw Error(ErrorKind::PreconditionViolated, "operators do not preserve compact elements");

  std::map<Elem, Elem> local;
  std::vector<std::string> ids;
  for (Elem i = 0; i < out.compacts.size(); ++i) {
    local.emplace(out.compacts[i], i);
    ids.push_back(l.id(out.compacts[i]));
  }
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem i = 0; i < out.compacts.size(); ++i)
    for (Elem j = 0; j < out.compacts.size(); ++j)
      if (l.leq(out.compacts[i], out.compacts[j])) order.emplace_back(i, j);
  std::vector<Elem> box, dia;
  for (auto a : out.compacts) {
    box.push_back(local.at(f.box[a]));
    dia.push_back(local.at(f.dia[a]));
  }
  out.compact_frame = validate_modal_frame(FiniteLattice::from_order(std::move(ids), order),
                                           std::move(box), std::move(dia));
  out.completion = ideal_completion(out.compact_frame);

  std::map<Subset, Elem> ideal_index;
  for (Elem i = 0; i < out.completion.ideals.size(); ++i)
    ideal_index.emplace(out.completion.ideals[i], i);
  out.to_ideals.resize(l.size());
  for (Elem a = 0; a < l.size(); ++a) {
    Subset local_set(out.compacts.size());
    for (Elem i = 0; i < out.compacts.size(); ++i)
      if (l.leq(out.compacts[i], a)) local_set.set(i);
    out.to_ideals[a] = ideal_index.at(local_set);
  }
  out.iso_class = classify_morphism(f, out.completion.frame, out.to_ideals);
  Subset hit(out.completion.frame.size());
  for (auto x : out.to_ideals) hit.set(x);
  out.is_iso = hit.all() && out.completion.frame.size() == l.size() &&
               out.iso_class.kind == MorphismKind::Strict;

  const auto& kf = out.compact_frame;
  out.transfer.push_back({"monotone-box", !monotone_violation(l, f.box, "m"),
                          !monotone_violation(kf.lattice, kf.box, "m")});
  out.transfer.push_back({"monotone-dia", !monotone_violation(l, f.dia, "m"),
                          !monotone_violation(kf.lattice, kf.dia, "m")});
  for (int ax = 8; ax <= kLastAxiom; ++ax)
    out.transfer.push_back({std::to_string(ax), axiom_holds(f, ax), axiom_holds(kf, ax)});
  return out;
}

}  // namespace mdual
