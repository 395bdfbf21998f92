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

#include "mdual/points.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

#include "mdual/omega.hpp"

namespace mdual {
namespace {

using enum Mode;

constexpr std::array<ModeInfo, 7> kModes{{
    {RelSp, "relsp", "MFrm", "RelSp", false, false, false, false, false, Strictness::Lax,
     MorphismLevel::PMorphism, false, false, false},
    // f^# only lands in the (22)-points for diamond-strict f, so morphisms
    // here are diamond-strict.
    {RelSpL, "relsp_l", "MFrm^dia", "RelSp^l", false, true, false, false, false,
     Strictness::DiamondStrict, MorphismLevel::PMorphism, true, false, false},
    {RelSpQ, "relspq", "MFrm", "RelSpq", true, false, true, false, true, Strictness::Lax,
     MorphismLevel::PQMorphism, false, false, false},
    {RelSpQL, "relspq_l", "MFrm^dia", "RelSpq^l", true, true, true, false, true,
     Strictness::DiamondStrict, MorphismLevel::PQMorphism, true, false, false},
    {RelSpQU, "relspq_u", "MFrm^box", "RelSpq^u", true, false, true, true, true,
     Strictness::BoxStrict, MorphismLevel::PQMorphism, false, true, false},
    {RelSpQC, "relspq_c", "MFrm^boxdia", "RelSpq^c", true, true, true, true, true,
     Strictness::Strict, MorphismLevel::PQMorphism, true, true, false},
    {EqSpQ, "eqspq", "EqFrm", "EqSpq^c", true, true, true, true, true, Strictness::Strict,
     MorphismLevel::PQMorphism, true, true, true},
}};

constexpr std::array<Mode, 7> kAllModes{RelSp, RelSpL, RelSpQ, RelSpQL, RelSpQU, RelSpQC, EqSpQ};

std::string names_of(const FiniteLattice& l, std::initializer_list<Elem> es) {
  std::string out;
  for (auto e : es) {
    if (!out.empty()) out += ", ";
    out += l.id(e);
  }
  return out;
}

// {c : pred(c)} as a subset of the carrier.
template <class Pred>
Subset select(std::size_t n, Pred&& pred) {
  Subset s(n);
  for (Elem c = 0; c < n; ++c)
    if (pred(c)) s.set(c);
  return s;
}

}  // namespace

const ModeInfo& mode_info(Mode mode) { return kModes[static_cast<std::size_t>(mode)]; }

std::span<const Mode> all_modes() { return kAllModes; }

Mode parse_mode(std::string_view name) {
  for (const auto& m : kModes)
    if (m.name == name) return m.mode;
  throw Error(ErrorKind::InvalidInput, "unknown mode '" + std::string(name) + "'",
              {std::string(name)});
}

bool frame_in_category(const ModalFrame& frame, Mode mode) {
  return !mode_info(mode).equivalence_only || classify_frame(frame).equivalence;
}

bool space_in_category(const RelationalSpace& space, Mode mode) {
  const auto& info = mode_info(mode);
  const auto cls = classify_space(space);
  if (info.equivalence_only) return cls.equivalence_space;
  return (!info.needs_lsc || cls.lsc) && (!info.needs_usc || cls.usc);
}

bool prepoint_condition(const ModalFrame& f, int condition, const PrePoint& u) {
  const auto& l = f.lattice;
  const auto p = u.character;
  switch (condition) {
    case 21:
      return !p(l, f.dia[u.element]);
    case 22:
      for (Elem c = 0; c < f.size(); ++c)
        if (!p(l, f.dia[c]) && !l.leq(c, u.element)) return false;
      return true;
    case 23:
      return l.leq(u.filter, canonical_filter(f, p).generator);
    case 24:
      return l.leq(canonical_filter(f, p).generator, u.filter);
    default:
      throw Error(ErrorKind::InvalidInput, "no pre-point condition " + std::to_string(condition));
  }
}

bool is_prepoint(const ModalFrame& f, Mode mode, const PrePoint& u) {
  const auto& info = mode_info(mode);
  if (!is_prime(f.lattice, u.character.prime)) return false;
  if (!info.triple && u.filter != canonical_filter(f, u.character).generator) return false;
  return prepoint_condition(f, 21, u) && (!info.cond22 || prepoint_condition(f, 22, u)) &&
         (!info.cond23 || prepoint_condition(f, 23, u)) &&
         (!info.cond24 || prepoint_condition(f, 24, u));
}

std::vector<PrePoint> enumerate_prepoints(const ModalFrame& f, Mode mode) {
  const auto& info = mode_info(mode);
  const auto& l = f.lattice;
  std::vector<PrePoint> out;
  for (auto p : characters(l)) {
    const Elem gp = canonical_filter(f, p).generator;
    std::vector<Elem> elements;
    if (info.cond22) {
      if (is_replete(f, p)) elements.push_back(canonical_element(f, p));
    } else {
      for (Elem a = 0; a < f.size(); ++a)
        if (!p(l, f.dia[a])) elements.push_back(a);
    }
    std::vector<Elem> filters;
    if (!info.triple) {
      filters.push_back(gp);
    } else {
      for (Elem g = 0; g < f.size(); ++g)
        if ((!info.cond23 || l.leq(g, gp)) && (!info.cond24 || l.leq(gp, g))) filters.push_back(g);
    }
    for (auto a : elements)
      for (auto g : filters) out.push_back({p, a, g});
  }
  return out;
}

bool relation_condition(const ModalFrame& f, int condition, const PrePoint& u, Character q) {
  const auto& l = f.lattice;
  const auto p = u.character;
  switch (condition) {
    case 25:
      return !l.leq(u.filter, q.prime);
    case 26:
      return !q(l, u.element);
    case 27:
      for (Elem c = 0; c < f.size(); ++c)
        if (p(l, f.box[c]) && !q(l, c)) return false;
      return true;
    case 28:
      for (Elem c = 0; c < f.size(); ++c)
        if (q(l, c) && !p(l, f.dia[c])) return false;
      return true;
    default:
      throw Error(ErrorKind::InvalidInput, "no relation condition " + std::to_string(condition));
  }
}

bool relation_holds(const ModalFrame& f, Mode mode, const PrePoint& u, const PrePoint& v) {
  if (!relation_condition(f, 26, u, v.character)) return false;
  if (mode_info(mode).triple) return relation_condition(f, 25, u, v.character);
  // p∘□ ≤ q, i.e. F_p ⊆ char(q); u.filter is F_p for pairs.
  return !f.lattice.leq(u.filter, v.character.prime);
}

namespace {

// Relation and witness demands shared by both pruning strategies.
struct PruneSetup {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> succ;
  std::vector<std::vector<std::size_t>> pred;
  std::vector<char> need29;  // [u*m + c]: c ≰ a_u
  std::vector<char> need30;  // [u*m + c]: c ∉ F_u (triple modes)
  std::vector<char> value;   // [v*m + c]: q_v(c)
};

PruneSetup setup_prune(const ModalFrame& f, Mode mode, std::span<const PrePoint> cands) {
  const auto& l = f.lattice;
  PruneSetup s;
  s.n = cands.size();
  s.m = f.size();
  s.succ.resize(s.n);
  s.pred.resize(s.n);
  for (std::size_t u = 0; u < s.n; ++u)
    for (std::size_t v = 0; v < s.n; ++v)
      if (relation_holds(f, mode, cands[u], cands[v])) {
        s.succ[u].push_back(v);
        s.pred[v].push_back(u);
      }
  const bool box = mode_info(mode).cond30;
  s.need29.assign(s.n * s.m, 0);
  s.need30.assign(s.n * s.m, 0);
  s.value.assign(s.n * s.m, 0);
  for (std::size_t u = 0; u < s.n; ++u)
    for (Elem c = 0; c < s.m; ++c) {
      s.need29[u * s.m + c] = !l.leq(c, cands[u].element);
      s.need30[u * s.m + c] = box && !l.leq(cands[u].filter, c);
      s.value[u * s.m + c] = cands[u].character(l, c);
    }
  return s;
}

}  // namespace

PruneResult prune_points(const ModalFrame& f, Mode mode, std::span<const PrePoint> cands,
                         const PruneOptions& options) {
  auto s = setup_prune(f, mode, cands);
  const auto n = s.n, m = s.m;
  std::vector<std::size_t> order = options.scan_order;
  if (order.empty()) {
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
  }
  if (order.size() != n) throw Error(ErrorKind::InvalidInput, "scan order is not a permutation");

  // Number of live successors taking the value 1 (resp. 0) at c.
  std::vector<std::size_t> ones(n * m, 0), zeros(n * m, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (auto v : s.succ[u])
      for (Elem c = 0; c < m; ++c) ++(s.value[v * m + c] ? ones : zeros)[u * m + c];

  std::deque<PruneStep> queue;
  for (auto u : order)
    for (Elem c = 0; c < m; ++c) {
      if (s.need29[u * m + c] && ones[u * m + c] == 0) queue.push_back({u, c, 29});
      if (s.need30[u * m + c] && zeros[u * m + c] == 0) queue.push_back({u, c, 30});
    }

  PruneResult out;
  std::vector<char> alive(n, 1);
  while (!queue.empty()) {
    const auto step = queue.front();
    queue.pop_front();
    const auto u = step.candidate;
    if (!alive[u]) continue;
    alive[u] = 0;
    out.trace.push_back(step);
    for (auto w : s.pred[u]) {
      if (!alive[w]) continue;
      for (Elem c = 0; c < m; ++c) {
        const auto k = w * m + c;
        if (s.value[u * m + c]) {
          if (--ones[k] == 0 && s.need29[k]) queue.push_back({w, c, 29});
        } else {
          if (--zeros[k] == 0 && s.need30[k]) queue.push_back({w, c, 30});
        }
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    if (alive[u]) out.survivors.push_back(u);
  return out;
}

PruneResult prune_points_rounds(const ModalFrame& f, Mode mode, std::span<const PrePoint> cands) {
  auto s = setup_prune(f, mode, cands);
  const auto n = s.n, m = s.m;
  std::vector<char> alive(n, 1);
  PruneResult out;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<PruneStep> doomed;
    for (std::size_t u = 0; u < n; ++u) {
      if (!alive[u]) continue;
      for (Elem c = 0; c < m; ++c) {
        bool one = false, zero = false;
        for (auto v : s.succ[u])
          if (alive[v]) (s.value[v * m + c] ? one : zero) = true;
        const auto k = u * m + c;
        if (s.need29[k] && !one) {
          doomed.push_back({u, c, 29});
          break;
        }
        if (s.need30[k] && !zero) {
          doomed.push_back({u, c, 30});
          break;
        }
      }
    }
    for (const auto& d : doomed) alive[d.candidate] = 0;
    out.trace.insert(out.trace.end(), doomed.begin(), doomed.end());
    changed = !doomed.empty();
  }
  for (std::size_t u = 0; u < n; ++u)
    if (alive[u]) out.survivors.push_back(u);
  return out;
}

std::string point_name(const FiniteLattice& l, Mode mode, const PrePoint& u) {
  std::string out = "(" + l.id(u.character.prime) + "," + l.id(u.element);
  if (mode_info(mode).triple) out += "," + l.id(u.filter);
  return out + ")";
}

std::optional<std::size_t> PointSpace::find(const PrePoint& u) const {
  auto it = std::lower_bound(points.begin(), points.end(), u);
  if (it == points.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

PointSpace build_point_space(const ModalFrame& f, Mode mode) {
  const auto& info = mode_info(mode);
  const auto& l = f.lattice;
  PointSpace out;
  out.mode = mode;
  out.frame = f;
  const auto cands = enumerate_prepoints(f, mode);
  auto pruned = prune_points(f, mode, cands);
  out.trace = std::move(pruned.trace);
  for (auto i : pruned.survivors) out.points.push_back(cands[i]);

  const auto n = out.points.size();
  std::vector<std::string> ids;
  std::vector<Subset> succ(n, Subset(n));
  for (std::size_t u = 0; u < n; ++u) {
    ids.push_back(point_name(l, mode, out.points[u]));
    for (std::size_t v = 0; v < n; ++v)
      if (relation_holds(f, mode, out.points[u], out.points[v])) succ[u].set(v);
  }
  for (Elem c = 0; c < f.size(); ++c)
    out.phi.push_back(select(n, [&](std::size_t u) { return out.points[u].character(l, c); }));
  out.space = RelationalSpace::from_sets(std::move(ids), out.phi, std::move(succ));
  for (Elem c = 0; c < f.size(); ++c) out.phi_open.push_back(out.space.open_position(out.phi[c]));
  out.omega = omega_space(out.space);
  out.phi_class = classify_morphism(f, out.omega, out.phi_open);

  const auto& pc = out.phi_class;
  out.checks.push_back({"phi is a frame morphism", true, pc.frame_morphism, pc.detail});
  out.checks.push_back({"phi is box-lax", true, pc.box_lax, pc.detail});
  out.checks.push_back({"phi is diamond-lax", true, pc.dia_lax, pc.detail});
  const auto cls = classify_space(out.space);
  out.checks.push_back({"phi is diamond-strict", info.cond22, pc.dia_strict(), pc.detail});
  out.checks.push_back({"point space is lower-semicontinuous", info.cond22, cls.lsc, ""});
  const bool usc_case = info.cond24 && info.cond30;
  out.checks.push_back({"phi is box-strict", usc_case, pc.box_strict(), pc.detail});
  out.checks.push_back({"point space is upper-semicontinuous", usc_case, cls.usc, ""});
  return out;
}

Subset phi(const PointSpace& fa, Elem c) { return fa.phi.at(c); }

TripmotResult tripmot_check(const PointSpace& fa, std::size_t point, Elem c) {
  const auto& l = fa.frame.lattice;
  const auto& u = fa.points.at(point);
  const auto& r = fa.space.successors(point);
  const auto& pc = fa.phi.at(c);
  TripmotResult out;
  out.left = l.leq(c, u.element) == !r.intersects(pc);
  out.right = !mode_info(fa.mode).triple || l.leq(u.filter, c) == r.is_subset_of(pc);
  return out;
}

namespace {

// Limit on candidate maps examined by the uniqueness search.
constexpr std::size_t kUniquenessLimit = 200000;

void require_frame_morphism(const ModalFrame& source, const ModalFrame& target,
                            std::span<const Elem> f, Mode mode) {
  const auto& info = mode_info(mode);
  if (f.size() != source.size())
    throw Error(ErrorKind::InvalidInput, "morphism table must cover every source element");
  for (auto x : f)
    if (x >= target.size()) throw Error(ErrorKind::UnknownElement, "morphism value out of range");
  const auto cls = classify_morphism(source, target, f);
  if (!satisfies(cls, info.morphisms))
    throw Error(ErrorKind::NotAMorphismOfMode,
                "not a " + std::string(to_string(info.morphisms)) + " morphism (" +
                    std::string(info.frame_category) + "): " +
                    (cls.detail.empty() ? std::string(to_string(cls.kind)) : cls.detail),
                {std::string(info.name)});
  if (!frame_in_category(source, mode) || !frame_in_category(target, mode))
    throw Error(ErrorKind::NotAMorphismOfMode,
                "frame outside " + std::string(info.frame_category), {std::string(info.name)});
}

std::string level_name(Mode mode) {
  return mode_info(mode).space_morphisms == MorphismLevel::PQMorphism
             ? "continuous pq-morphism"
             : "continuous p-morphism";
}

}  // namespace

std::vector<PrePoint> f_sharp_tuples(const ModalFrame& a, Mode mode, const RelationalSpace& x,
                                     std::span<const Elem> f) {
  const auto& l = a.lattice;
  const auto& opens = x.opens();
  auto u = [&](Elem c) -> const Subset& { return opens[f[c]]; };
  std::vector<PrePoint> out;
  for (Point pt = 0; pt < x.size(); ++pt) {
    const auto& r = x.successors(pt);
    const Character p{l.big_join(select(l.size(), [&](Elem b) { return !u(b).test(pt); }))};
    const Elem elem = l.big_join(select(l.size(), [&](Elem c) { return !r.intersects(u(c)); }));
    const Elem gen = mode_info(mode).triple
                         ? l.big_meet(select(l.size(), [&](Elem c) { return r.is_subset_of(u(c)); }))
                         : canonical_filter(a, p).generator;
    out.push_back({p, elem, gen});
  }
  return out;
}

FSharpResult f_sharp(const PointSpace& fa, const RelationalSpace& x, std::span<const Elem> f,
                     bool check_uniqueness) {
  const auto mode = fa.mode;
  const auto& info = mode_info(mode);
  const auto& a = fa.frame;
  const auto& l = a.lattice;
  const auto omega_x = omega_space(x);
  require_frame_morphism(a, omega_x, f, mode);
  if (!space_in_category(x, mode))
    throw Error(ErrorKind::PreconditionViolated,
                "space outside " + std::string(info.space_category), {std::string(info.name)});

  const auto n = x.size();
  const auto& opens = x.opens();
  auto u = [&](Elem c) -> const Subset& { return opens[f[c]]; };
  FSharpResult out;
  out.images = f_sharp_tuples(a, mode, x, f);
  out.map.assign(n, 0);
  bool all_points = true;
  std::string missing;
  for (Point pt = 0; pt < n; ++pt) {
    if (auto idx = fa.find(out.images[pt])) {
      out.map[pt] = *idx;
    } else {
      all_points = false;
      if (missing.empty()) missing = x.id(pt) + " ↦ " + point_name(l, mode, out.images[pt]);
    }
  }
  out.checks.push_back({"every f# image is a point", true, all_points, missing});
  if (!all_points) return out;

  const auto cls = classify_space_morphism(x, fa.space, out.map);
  out.checks.push_back({"f# is a " + level_name(mode), true, at_least(cls, info.space_morphisms),
                        cls.witnesses.empty() ? "" : cls.witnesses.front()});
  bool factors = true;
  std::string detail;
  for (Elem c = 0; c < l.size() && factors; ++c)
    if (preimage(out.map, n, fa.phi[c]) != u(c)) {
      factors = false;
      detail = "differs at " + l.id(c);
    }
  out.checks.push_back({"Omega(f#) after phi equals f", true, factors, detail});

  if (!check_uniqueness) return out;
  // Any g with g⁻¹∘φ_A = f sends x to a point with character p_x.
  std::vector<std::vector<std::size_t>> choices(n);
  std::size_t total = 1;
  bool too_many = false;
  for (Point pt = 0; pt < n; ++pt) {
    for (std::size_t j = 0; j < fa.points.size(); ++j)
      if (fa.points[j].character == out.images[pt].character) choices[pt].push_back(j);
    if (choices[pt].empty()) total = 0;
    if (total != 0 && total > kUniquenessLimit / choices[pt].size()) too_many = true;
    total *= choices[pt].size();
  }
  if (too_many) {
    out.checks.push_back({"f# is the unique factorization", false, true,
                          "skipped: more than " + std::to_string(kUniquenessLimit) + " candidates"});
    return out;
  }
  out.uniqueness_candidates = total;
  std::size_t found = 0;
  bool found_other = false;
  std::vector<std::size_t> pos(n, 0), g(n);
  for (std::size_t iter = 0; iter < total; ++iter) {
    for (Point pt = 0; pt < n; ++pt) g[pt] = choices[pt][pos[pt]];
    if (at_least(classify_space_morphism(x, fa.space, g), info.space_morphisms)) {
      ++found;
      if (g != out.map) found_other = true;
    }
    for (Point pt = 0; pt < n; ++pt) {
      if (++pos[pt] < choices[pt].size()) break;
      pos[pt] = 0;
    }
  }
  out.checks.push_back({"f# is the unique factorization", true, found == 1 && !found_other,
                        std::to_string(found) + " factorizing morphism(s) among " +
                            std::to_string(total) + " candidates"});
  return out;
}

PsiResult psi(const RelationalSpace& x, Mode mode) {
  const auto& info = mode_info(mode);
  const auto a = omega_space(x);
  PsiResult out;
  out.target = build_point_space(a, mode);
  const auto n = x.size();
  out.map.assign(n, 0);
  bool all_points = true;
  std::string missing;
  for (Point pt = 0; pt < n; ++pt) {
    Subset outside(n);
    for (const auto& u : x.opens())
      if (!u.test(pt)) outside |= u;
    const auto& r = x.successors(pt);
    const Character p{x.open_position(outside)};
    const Elem elem = x.open_position(interior(x, ~r));
    const Elem gen = info.triple ? x.open_position(saturation(x, r))
                                 : canonical_filter(a, p).generator;
    const PrePoint img{p, elem, gen};
    out.images.push_back(img);
    if (auto idx = out.target.find(img)) {
      out.map[pt] = *idx;
    } else {
      all_points = false;
      if (missing.empty()) missing = x.id(pt) + " ↦ " + point_name(a.lattice, mode, img);
    }
  }
  out.checks.push_back({"every psi image is a point", true, all_points, missing});
  if (!all_points) return out;

  const auto cls = classify_space_morphism(x, out.target.space, out.map);
  out.checks.push_back({"psi is a " + level_name(mode), true, at_least(cls, info.space_morphisms),
                        cls.witnesses.empty() ? "" : cls.witnesses.front()});
  const bool applies = space_in_category(x, mode) && frame_in_category(a, mode);
  bool agrees = true;
  if (applies) {
    std::vector<Elem> id(a.size());
    for (Elem c = 0; c < a.size(); ++c) id[c] = c;
    agrees = f_sharp(out.target, x, id, false).map == out.map;
  }
  out.checks.push_back({"psi equals f# of the identity", applies, agrees, ""});
  return out;
}

std::vector<std::size_t> point_functor_on_morphism(const PointSpace& fa, const PointSpace& fb,
                                                   std::span<const Elem> f) {
  if (fa.mode != fb.mode) throw Error(ErrorKind::InvalidInput, "point spaces of different modes");
  const auto mode = fa.mode;
  const auto& a = fa.frame;
  const auto& la = a.lattice;
  const auto& lb = fb.frame.lattice;
  require_frame_morphism(a, fb.frame, f, mode);
  std::vector<std::size_t> out;
  out.reserve(fb.points.size());
  for (std::size_t j = 0; j < fb.points.size(); ++j) {
    const auto& v = fb.points[j];
    const Character p{la.big_join(select(la.size(), [&](Elem c) { return lb.leq(f[c], v.character.prime); }))};
    const Elem elem = la.big_join(select(la.size(), [&](Elem c) { return lb.leq(f[c], v.element); }));
    const Elem gen = mode_info(mode).triple
                         ? la.big_meet(select(la.size(), [&](Elem c) { return lb.leq(v.filter, f[c]); }))
                         : canonical_filter(a, p).generator;
    const PrePoint img{p, elem, gen};
    auto idx = fa.find(img);
    if (!idx)
      throw Error(ErrorKind::ImageNotAPoint,
                  fb.space.id(j) + " ↦ " + point_name(la, mode, img) + " is not a point",
                  {fb.space.id(j), point_name(la, mode, img)});
    out.push_back(*idx);
  }
  return out;
}

Character related_character(const ModalFrame& f, Character p, Elem a, Elem b) {
  const auto& l = f.lattice;
  if (p(l, f.dia[a]) || !p(l, f.dia[b]))
    throw Error(ErrorKind::PreconditionViolated,
                "need p(dia a) = 0 and p(dia b) = 1 at " + names_of(l, {p.prime, a, b}),
                {l.id(p.prime), l.id(a), l.id(b)});
  const PrePoint u{p, a, canonical_filter(f, p).generator};
  for (auto q : characters(l))
    if (!q(l, a) && q(l, b) && relation_condition(f, 27, u, q)) return q;
  throw Error(ErrorKind::NoWitness, "no related character for " + names_of(l, {p.prime, a, b}),
              {l.id(p.prime), l.id(a), l.id(b)});
}

PrePoint extend_to_point(const PointSpace& fa, Character p, Elem a) {
  const auto& f = fa.frame;
  const auto& l = f.lattice;
  if (p(l, f.dia[a]))
    throw Error(ErrorKind::PreconditionViolated, "need p(dia a) = 0 at " + names_of(l, {p.prime, a}),
                {l.id(p.prime), l.id(a)});
  std::vector<PrePoint> cands;
  for (const auto& u : fa.points)
    if (u.character == p && l.leq(a, u.element)) cands.push_back(u);
  if (cands.empty())
    throw Error(ErrorKind::NoWitness, "no point extends " + names_of(l, {p.prime, a}),
                {l.id(p.prime), l.id(a)});
  auto strictly_below = [&](Elem x, Elem y) { return x != y && l.leq(x, y); };
  std::vector<PrePoint> top;
  for (const auto& u : cands)
    if (std::none_of(cands.begin(), cands.end(),
                     [&](const PrePoint& v) { return strictly_below(u.element, v.element); }))
      top.push_back(u);
  for (const auto& u : top)
    if (std::none_of(top.begin(), top.end(), [&](const PrePoint& v) {
          return v.element == u.element && strictly_below(v.filter, u.filter);
        }))
      return u;
  return top.front();
}

PrePoint extend_to_point(const ModalFrame& f, Character p, Elem a, Mode mode) {
  return extend_to_point(build_point_space(f, mode), p, a);
}

}  // namespace mdual
