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

#include "mdual/sweep.hpp"

#include <algorithm>

#include "mdual/duality.hpp"
#include "mdual/enumerate.hpp"
#include "mdual/omega.hpp"

namespace mdual {
namespace {

std::string first_failure(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.ok()) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return "";
}

Check suite(std::string name, Mode mode, bool premise) {
  return Check{std::move(name) + "/" + std::string(to_string(mode)), premise, true, ""};
}

}  // namespace

bool spatiality_expected(const ModalFrame& frame, Mode mode) {
  const auto fc = classify_frame(frame);
  switch (mode) {
    case Mode::RelSp:
    case Mode::RelSpQ:
      return true;
    case Mode::RelSpL:
      return fc.lower && fc.convex;
    case Mode::RelSpQC:
      return fc.convex;
    case Mode::EqSpQ:
      return fc.convex && fc.equivalence;
    default:
      return false;
  }
}

std::vector<Check> frame_invariants(const ModalFrame& frame, std::span<const Mode> modes) {
  const auto fc = classify_frame(frame);
  std::vector<Check> out;
  for (auto m : modes) {
    const bool in_cat = frame_in_category(frame, m);
    const auto fa = build_point_space(frame, m);
    const auto sc = classify_space(fa.space);

    auto c = suite("phi self-checks", m, in_cat);
    c.holds = all_ok(fa.checks);
    c.detail = first_failure(fa.checks);
    out.push_back(c);

    c = suite("point space in category", m, in_cat);
    c.holds = space_in_category(fa.space, m);
    out.push_back(c);

    c = suite("spatial", m, in_cat && spatiality_expected(frame, m));
    if (c.premise) c.holds = is_frame_isomorphism(frame, fa.omega, fa.phi_open);
    out.push_back(c);

    c = suite("phi injective", m, m == Mode::RelSpL && fc.lower);
    if (c.premise) {
      auto sorted = fa.phi_open;
      std::sort(sorted.begin(), sorted.end());
      c.holds = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    out.push_back(c);

    c = suite("sober", m, in_cat && space_in_category(fa.space, m));
    if (c.premise) {
      const auto v = check_sober(fa.space, m);
      c.holds = v.pass();
      c.detail = first_failure(v.checks);
    }
    out.push_back(c);

    c = suite("triangles", m, in_cat);
    {
      const auto v = check_triangles(frame, m);
      c.holds = v.pass();
      c.detail = first_failure(v.checks);
    }
    out.push_back(c);

    c = suite("correspondence", m, in_cat);
    {
      const auto r = correspondence_report(frame, m);
      c.holds = r.pass();
      for (const auto& row : r.rows)
        if (!row.ok()) c.detail = row.property;
    }
    out.push_back(c);

    c = suite("closed images", m, m == Mode::RelSp);
    for (std::size_t x = 0; x < fa.points.size() && c.premise && c.holds; ++x)
      if (!is_closed(fa.space, fa.space.successors(x))) {
        c.holds = false;
        c.detail = fa.space.id(x);
      }
    out.push_back(c);

    c = suite("lens images", m, m == Mode::RelSpQ);
    for (std::size_t x = 0; x < fa.points.size() && c.premise && c.holds; ++x)
      if (!is_lens(fa.space, fa.space.successors(x))) {
        c.holds = false;
        c.detail = fa.space.id(x);
      }
    out.push_back(c);

    c = suite("tripmot", m, true);
    for (std::size_t x = 0; x < fa.points.size() && c.holds; ++x)
      for (Elem e = 0; e < frame.size() && c.holds; ++e) {
        const auto t = tripmot_check(fa, x, e);
        if (!t.left || !t.right) {
          c.holds = false;
          c.detail = fa.space.id(x) + " at " + frame.lattice.id(e);
        }
      }
    out.push_back(c);

    c = suite("continuous when convex", m, m == Mode::RelSpL && fc.convex);
    if (c.premise) c.holds = sc.continuous;
    out.push_back(c);
  }
  return out;
}

std::vector<Check> space_invariants(const RelationalSpace& space, std::span<const Mode> modes) {
  std::vector<Check> out;
  for (auto c : omega_class_report(space).implications) {
    c.name = "omega/" + c.name;
    out.push_back(std::move(c));
  }
  const auto omega = omega_space(space);
  for (auto m : modes) {
    const bool in_cat = space_in_category(space, m);
    auto c = suite("omega spatial", m, in_cat);
    if (in_cat) {
      const auto v = check_spatial(omega, m);
      c.holds = v.pass();
      c.detail = first_failure(v.checks);
    }
    out.push_back(c);
    c = suite("space triangles", m, in_cat);
    if (in_cat) {
      const auto v = check_triangles(space, m);
      c.holds = v.pass();
      c.detail = first_failure(v.checks);
    }
    out.push_back(c);
  }
  return out;
}

bool SweepReport::pass() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const auto& kv) { return kv.second.failed == 0; });
}

SweepReport sweep(const SweepOptions& options) {
  if (options.max_lattice > kMaxSweepLattice)
    throw Error(ErrorKind::BoundTooLarge,
                "lattice bound " + std::to_string(options.max_lattice) + " exceeds " +
                    std::to_string(kMaxSweepLattice));
  if (options.max_points > kMaxSweepPoints)
    throw Error(ErrorKind::BoundTooLarge,
                "point bound " + std::to_string(options.max_points) + " exceeds " +
                    std::to_string(kMaxSweepPoints));
  SweepReport report;
  report.options = options;
  std::vector<Mode> modes = options.modes;
  if (modes.empty()) modes.assign(all_modes().begin(), all_modes().end());

  auto tally = [&](const std::vector<Check>& checks, const std::string& subject) {
    for (const auto& c : checks) {
      auto& t = report.suites[c.name];
      if (!c.premise) {
        ++t.vacuous;
      } else if (c.holds) {
        ++t.passed;
      } else {
        ++t.failed;
        if (t.first_failure.empty())
          t.first_failure = subject + (c.detail.empty() ? "" : ": " + c.detail);
      }
    }
  };

  if (options.max_lattice > 0) {
    for (const auto& l : distributive_lattices(options.max_lattice)) {
      ++report.lattices;
      for (const auto& f : modal_frames(l)) {
        ++report.frames;
        tally(frame_invariants(f, modes), "frame #" + std::to_string(report.frames) + " on " +
                                              std::to_string(l.size()) + " elements");
      }
    }
  }
  if (options.max_points > 0) {
    for (std::size_t n = 0; n <= options.max_points; ++n)
      for_each_space(n, true, [&](const RelationalSpace& s) {
        ++report.spaces;
        tally(space_invariants(s, modes), "space #" + std::to_string(report.spaces) + " on " +
                                              std::to_string(n) + " points");
      });
  }
  return report;
}

}  // namespace mdual
