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

#include "mdual/duality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "mdual/omega.hpp"

namespace mdual {
namespace {

// Hom-set enumeration refuses function spaces larger than this.
constexpr double kHomSearchLimit = 2e7;

bool injective(std::span<const std::size_t> map, std::size_t target_size) {
  std::vector<char> seen(target_size, 0);
  for (auto y : map) {
    if (y >= target_size || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool bijective(std::span<const std::size_t> map, std::size_t target_size) {
  return map.size() == target_size && injective(map, target_size);
}

void append(std::vector<Check>& to, const std::vector<Check>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

bool is_frame_isomorphism(const ModalFrame& s, const ModalFrame& t, std::span<const Elem> map) {
  const auto n = s.size();
  if (t.size() != n || !bijective(map, n)) return false;
  for (Elem a = 0; a < n; ++a) {
    if (map[s.box[a]] != t.box[map[a]] || map[s.dia[a]] != t.dia[map[a]]) return false;
    for (Elem b = 0; b < n; ++b)
      if (s.lattice.leq(a, b) != t.lattice.leq(map[a], map[b])) return false;
  }
  return true;
}

std::optional<std::vector<Elem>> find_frame_isomorphism(const ModalFrame& a, const ModalFrame& b) {
  const auto n = a.size();
  if (b.size() != n) return std::nullopt;
  const auto& la = a.lattice;
  const auto& lb = b.lattice;
  std::vector<Elem> map(n), inv(n, n);
  std::optional<std::vector<Elem>> found;
  std::function<void(Elem)> go = [&](Elem x) {
    if (found) return;
    if (x == n) {
      if (is_frame_isomorphism(a, b, map)) found = map;
      return;
    }
    for (Elem y = 0; y < n; ++y) {
      if (inv[y] != n || la.up(x).count() != lb.up(y).count() ||
          la.down(x).count() != lb.down(y).count())
        continue;
      bool ok = true;
      for (Elem z = 0; z < x && ok; ++z)
        ok = la.leq(z, x) == lb.leq(map[z], y) && la.leq(x, z) == lb.leq(y, map[z]);
      if (!ok) continue;
      map[x] = y;
      inv[y] = x;
      go(x + 1);
      inv[y] = n;
    }
  };
  go(0);
  return found;
}

bool is_space_isomorphism(const RelationalSpace& s, const RelationalSpace& t,
                          std::span<const Point> map, std::string* detail) {
  auto fail = [&](std::string why) {
    if (detail) *detail = std::move(why);
    return false;
  };
  const auto n = s.size();
  if (t.size() != n || !bijective(map, n)) return fail("not a bijection");
  for (const auto& v : t.opens())
    if (!s.is_open(preimage(map, n, v))) return fail("preimage of " + set_name(t, v) + " not open");
  for (const auto& u : s.opens())
    if (!t.is_open(image(map, n, u))) return fail("image of " + set_name(s, u) + " not open");
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      if (s.related(x, y) != t.related(map[x], map[y]))
        return fail("relation differs at (" + s.id(x) + "," + s.id(y) + ")");
  return true;
}

std::optional<std::vector<Point>> find_space_isomorphism(const RelationalSpace& a,
                                                         const RelationalSpace& b) {
  const auto n = a.size();
  if (b.size() != n || a.opens().size() != b.opens().size()) return std::nullopt;
  // Per-point invariants: number of opens containing it, relation degrees.
  auto signature = [](const RelationalSpace& s, Point x) {
    std::size_t in = 0, opens = 0;
    for (Point y = 0; y < s.size(); ++y) in += s.related(y, x);
    for (const auto& u : s.opens()) opens += u.test(x);
    return std::tuple{opens, s.successors(x).count(), in, s.related(x, x)};
  };
  std::vector<Point> map(n), inv(n, n);
  std::optional<std::vector<Point>> found;
  std::function<void(Point)> go = [&](Point x) {
    if (found) return;
    if (x == n) {
      if (is_space_isomorphism(a, b, map)) found = map;
      return;
    }
    for (Point y = 0; y < n; ++y) {
      if (inv[y] != n || signature(a, x) != signature(b, y)) continue;
      bool ok = true;
      for (Point z = 0; z < x && ok; ++z)
        ok = a.related(z, x) == b.related(map[z], y) && a.related(x, z) == b.related(y, map[z]) &&
             specialization_leq(a, z, x) == specialization_leq(b, map[z], y) &&
             specialization_leq(a, x, z) == specialization_leq(b, y, map[z]);
      if (!ok) continue;
      map[x] = y;
      inv[y] = x;
      go(x + 1);
      inv[y] = n;
    }
  };
  go(0);
  return found;
}

Verdict check_spatial(const ModalFrame& frame, Mode mode) {
  Verdict v;
  v.kind = "spatial";
  v.mode = mode;
  v.applicable = frame_in_category(frame, mode);
  const auto fa = build_point_space(frame, mode);
  const bool inj = injective(fa.phi_open, fa.omega.size());
  const bool iso = is_frame_isomorphism(frame, fa.omega, fa.phi_open);
  append(v.checks, fa.checks);
  v.checks.push_back({"phi is an isomorphism", true, iso,
                      iso ? "" : inj ? "injective but not strict" : "not injective"});
  v.properties["injective"] = inj;
  v.properties["surjective"] = bijective(fa.phi_open, fa.omega.size()) || !inj;
  v.properties["box_strict"] = fa.phi_class.box_strict();
  v.properties["diamond_strict"] = fa.phi_class.dia_strict();
  v.counts["prepoints"] = enumerate_prepoints(frame, mode).size();
  v.counts["points"] = fa.points.size();
  return v;
}

Verdict check_sober(const RelationalSpace& space, Mode mode) {
  Verdict v;
  v.kind = "sober";
  v.mode = mode;
  v.applicable = space_in_category(space, mode);
  const auto r = psi(space, mode);
  append(v.checks, r.checks);
  std::string detail;
  const bool points_ok = all_ok(r.checks);
  const bool iso = points_ok && is_space_isomorphism(space, r.target.space, r.map, &detail);
  v.checks.push_back({"psi is an isomorphism", true, iso, detail});
  v.properties["injective"] = points_ok && injective(r.map, r.target.points.size());
  v.counts["points"] = space.size();
  v.counts["target_points"] = r.target.points.size();
  return v;
}

Verdict check_triangles(const ModalFrame& frame, Mode mode) {
  Verdict v;
  v.kind = "triangles";
  v.mode = mode;
  v.applicable = frame_in_category(frame, mode);
  const auto fa = build_point_space(frame, mode);
  const auto r = psi(fa.space, mode);
  append(v.checks, r.checks);
  Check c{"F(phi) after psi is the identity on F(A)", true, false, ""};
  try {
    const auto back = point_functor_on_morphism(fa, r.target, fa.phi_open);
    c.holds = true;
    for (std::size_t x = 0; x < fa.points.size() && c.holds; ++x)
      if (back[r.map[x]] != x) {
        c.holds = false;
        c.detail = "moves " + fa.space.id(x);
      }
  } catch (const Error& e) {
    c.detail = e.what();
  }
  v.checks.push_back(c);
  return v;
}

Verdict check_triangles(const RelationalSpace& space, Mode mode) {
  Verdict v;
  v.kind = "triangles";
  v.mode = mode;
  v.applicable = space_in_category(space, mode);
  const auto r = psi(space, mode);
  append(v.checks, r.checks);
  Check c{"Omega(psi) after phi is the identity on Omega(X)", true, false, ""};
  if (all_ok(r.checks)) {
    try {
      const auto om = omega_map(space, r.target.space, r.map);
      c.holds = true;
      for (Elem e = 0; e < r.target.phi_open.size() && c.holds; ++e)
        if (om[r.target.phi_open[e]] != e) {
          c.holds = false;
          c.detail = "moves " + set_name(space, space.opens()[e]);
        }
    } catch (const Error& e) {
      c.detail = e.what();
    }
  } else {
    c.detail = "psi is not defined";
  }
  v.checks.push_back(c);
  return v;
}

std::vector<std::vector<Elem>> frame_homs(const ModalFrame& s, const ModalFrame& t,
                                          Strictness strictness) {
  const auto& ls = s.lattice;
  const auto& lt = t.lattice;
  const auto ji = join_irreducibles(ls);
  if (std::pow(double(t.size()), double(ji.size())) > kHomSearchLimit)
    throw Error(ErrorKind::BoundTooLarge, "frame hom-set search space too large");
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> img(ji.size());
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == ji.size()) {
      std::vector<Elem> f(s.size(), lt.bottom());
      for (Elem a = 0; a < s.size(); ++a)
        for (std::size_t i = 0; i < ji.size(); ++i)
          if (ls.leq(ji[i], a)) f[a] = lt.join(f[a], img[i]);
      if (preserves_frame_structure(ls, lt, f) && satisfies(classify_morphism(s, t, f), strictness))
        out.push_back(std::move(f));
      return;
    }
    for (Elem y = 0; y < t.size(); ++y) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (ls.leq(ji[i], ji[k])) ok = lt.leq(img[i], y);
        if (ok && ls.leq(ji[k], ji[i])) ok = lt.leq(y, img[i]);
      }
      if (!ok) continue;
      img[k] = y;
      go(k + 1);
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> space_homs(const RelationalSpace& s, const RelationalSpace& t,
                                           MorphismLevel level) {
  const auto n = s.size(), m = t.size();
  if (std::pow(double(m), double(n)) > kHomSearchLimit)
    throw Error(ErrorKind::BoundTooLarge, "space hom-set search space too large");
  std::vector<std::vector<Point>> out;
  if (m == 0 && n > 0) return out;
  std::vector<Point> g(n, 0);
  while (true) {
    if (at_least(classify_space_morphism(s, t, g), level)) out.push_back(g);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++g[i] < m) break;
      g[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict check_adjunction_bijection(const ModalFrame& frame, const RelationalSpace& space,
                                   Mode mode) {
  const auto& info = mode_info(mode);
  Verdict v;
  v.kind = "adjunction";
  v.mode = mode;
  v.applicable = frame_in_category(frame, mode) && space_in_category(space, mode);
  v.notes.push_back(std::string("frame morphisms: ") + std::string(info.frame_category) + " (" +
                    std::string(to_string(info.morphisms)) + ")");
  v.notes.push_back(std::string("space morphisms: ") + std::string(info.space_category) + " (" +
                    std::string(to_string(info.space_morphisms)) + ")");
  if (!v.applicable) return v;

  const auto fa = build_point_space(frame, mode);
  const auto omega_x = omega_space(space);
  const auto h1 = frame_homs(frame, omega_x, info.morphisms);
  const auto h2 = space_homs(space, fa.space, info.space_morphisms);
  v.counts["frame_homs"] = h1.size();
  v.counts["space_homs"] = h2.size();
  const std::set<std::vector<Elem>> s1(h1.begin(), h1.end());
  const std::set<std::vector<Point>> s2(h2.begin(), h2.end());

  Check forward{"f# lands in the space hom-set and returns f", true, true, ""};
  for (const auto& f : h1) {
    const auto fs = f_sharp(fa, space, f, false);
    if (!all_ok(fs.checks) || !s2.contains(fs.map)) {
      forward.holds = false;
      for (const auto& c : fs.checks)
        if (!c.ok()) forward.detail = c.name + ": " + c.detail;
      if (forward.detail.empty()) forward.detail = "f# outside the space hom-set";
      break;
    }
  }
  Check backward{"Omega(g) after phi lands in the frame hom-set and g = (Omega(g) phi)#", true,
                 true, ""};
  for (const auto& g : h2) {
    std::vector<Elem> f(frame.size());
    for (Elem c = 0; c < frame.size(); ++c)
      f[c] = space.open_position(preimage(g, space.size(), fa.phi[c]));
    if (!s1.contains(f)) {
      backward.holds = false;
      backward.detail = "Omega(g) after phi is not a mode morphism";
      break;
    }
    if (f_sharp(fa, space, f, false).map != g) {
      backward.holds = false;
      backward.detail = "(Omega(g) phi)# differs from g";
      break;
    }
  }
  v.checks.push_back(forward);
  v.checks.push_back(backward);
  v.checks.push_back({"hom-sets have equal size", true, h1.size() == h2.size(),
                      std::to_string(h1.size()) + " vs " + std::to_string(h2.size())});

  if (mode == Mode::RelSpL) {
    // The table row for this mode lists lax morphisms; count how many of
    // those fall outside the diamond-strict category and miss the points.
    std::size_t outside = 0, missing = 0;
    for (const auto& f : frame_homs(frame, omega_x, Strictness::Lax)) {
      if (satisfies(classify_morphism(frame, omega_x, f), info.morphisms)) continue;
      ++outside;
      for (const auto& t : f_sharp_tuples(frame, mode, space, f))
        if (!fa.find(t)) {
          ++missing;
          break;
        }
    }
    v.counts["lax_homs_outside_mode"] = outside;
    v.counts["lax_homs_without_points"] = missing;
  }
  return v;
}

DualityReport duality_report(const std::vector<NamedFrame>& frames,
                             const std::vector<NamedSpace>& spaces, Mode mode) {
  DualityReport out;
  out.mode = mode;
  auto tally = [&](const DualityEntry& e) {
    if (!e.verdict.applicable)
      ++out.not_applicable;
    else if (e.verdict.pass() && e.round_trip_iso)
      ++out.passed;
    else
      ++out.failed;
  };
  for (const auto& [name, frame] : frames) {
    DualityEntry e{name, "frame", check_spatial(frame, mode), false};
    e.round_trip_iso = find_frame_isomorphism(build_point_space(frame, mode).omega, frame).has_value();
    tally(e);
    out.entries.push_back(std::move(e));
  }
  for (const auto& [name, space] : spaces) {
    DualityEntry e{name, "space", check_sober(space, mode), false};
    e.round_trip_iso =
        find_space_isomorphism(psi(space, mode).target.space, space).has_value();
    tally(e);
    out.entries.push_back(std::move(e));
  }
  return out;
}

bool CorrespondenceReport::pass() const {
  return !applicable || std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
}

CorrespondenceReport correspondence_report(const ModalFrame& frame, Mode mode) {
  const auto& info = mode_info(mode);
  CorrespondenceReport out;
  out.mode = mode;
  out.applicable = frame_in_category(frame, mode);
  const auto fa = build_point_space(frame, mode);
  const auto cls = classify_space(fa.space);
  const bool both = info.cond22 && info.cond24;
  auto row = [&](std::string name, std::vector<int> axioms, bool space_side, bool asserted) {
    CorrespondenceRow r{std::move(name), std::move(axioms), true, space_side, asserted};
    for (int ax : r.axioms) r.frame_side = r.frame_side && axiom_holds(frame, ax);
    out.rows.push_back(std::move(r));
  };
  row("reflexive", {11, 12}, cls.reflexive, both);
  row("symmetric", {15, 16}, cls.symmetric, both);
  row("transitive", {13, 14}, cls.transitive, both);
  row("serial", {10}, cls.serial, info.cond24);
  return out;
}

std::vector<Check> correspondence_checks(const RelationalSpace& space) {
  return omega_class_report(space).implications;
}

}  // namespace mdual
