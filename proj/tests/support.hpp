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

// Shared helpers for the unit and acceptance tests.

#ifndef MDUAL_TESTS_SUPPORT_HPP
#define MDUAL_TESTS_SUPPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "mdual/io.hpp"
#include "mdual/lattice.hpp"
#include "mdual/modal_frame.hpp"
#include "mdual/points.hpp"
#include "mdual/space.hpp"

namespace mdual::testing {

inline std::string fixture_path(const std::string& file) {
  return std::string(MDUAL_FIXTURE_DIR) + "/" + file;
}

inline ModalFrame load_frame(const std::string& name) {
  return frame_from_json(read_json_file(fixture_path(name + ".frame.json")));
}

inline RelationalSpace load_space(const std::string& name) {
  return space_from_json(read_json_file(fixture_path(name + ".space.json")));
}

// Chain with the ids in increasing order.
inline FiniteLattice chain(std::vector<std::string> ids) {
  std::vector<FiniteLattice::LeqPair> leq;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) leq.emplace_back(ids[i], ids[i + 1]);
  return FiniteLattice::validate(std::move(ids), leq);
}

inline FiniteLattice chain3() { return chain({"bot", "m", "top"}); }

inline FiniteLattice boolean4() {
  return FiniteLattice::validate({"bot", "a", "b", "top"},
                                 {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

// Operator tables given as target ids in element order.
inline std::vector<Elem> table(const FiniteLattice& l, const std::vector<std::string>& ids) {
  std::vector<Elem> out;
  for (const auto& id : ids) out.push_back(l.index_of(id));
  return out;
}

inline std::vector<Elem> identity_table(std::size_t n) {
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

inline ModalFrame identity_frame(FiniteLattice l) {
  auto id = identity_table(l.size());
  return validate_modal_frame(std::move(l), id, id);
}

inline ModalFrame frame(FiniteLattice l, const std::vector<std::string>& box,
                        const std::vector<std::string>& dia) {
  auto b = table(l, box);
  auto d = table(l, dia);
  return validate_modal_frame(std::move(l), std::move(b), std::move(d));
}

inline RelationalSpace space(std::vector<std::string> points,
                             const std::vector<std::vector<std::string>>& opens,
                             const std::vector<RelationalSpace::Pair>& relation) {
  return RelationalSpace::validate(std::move(points), opens, relation);
}

inline Subset points_of(const RelationalSpace& s, const std::vector<std::string>& ids) {
  Subset u(s.size());
  for (const auto& id : ids) u.set(s.index_of(id));
  return u;
}

inline PrePoint prepoint(const FiniteLattice& l, const std::string& prime, const std::string& element,
                         const std::string& filter) {
  return PrePoint{Character{l.index_of(prime)}, l.index_of(element), l.index_of(filter)};
}

// Whether `u` meets the point conditions relative to the candidate set `s`.
inline bool closed_at(const ModalFrame& f, Mode mode, const std::vector<PrePoint>& cands,
                      unsigned long long s, std::size_t u) {
  const auto& l = f.lattice;
  const auto& info = mode_info(mode);
  const auto& pu = cands[u];
  for (Elem c = 0; c < l.size(); ++c) {
    bool need29 = !l.leq(c, pu.element), need30 = info.cond30 && !l.leq(pu.filter, c);
    for (std::size_t v = 0; v < cands.size() && (need29 || need30); ++v) {
      if (!((s >> v) & 1ULL) || !relation_holds(f, mode, pu, cands[v])) continue;
      const bool qc = cands[v].character(l, c);
      if (qc) need29 = false;
      if (!qc) need30 = false;
    }
    if (need29 || need30) return false;
  }
  return true;
}

// Union of every subset of the candidates closed under the point
// conditions, found by trying all of them. Returns the member mask.
inline unsigned long long brute_force_points(const ModalFrame& f, Mode mode,
                                             const std::vector<PrePoint>& cands) {
  const std::size_t n = cands.size();
  unsigned long long all = 0;
  for (unsigned long long s = 0; s < (1ULL << n); ++s) {
    bool closed = true;
    for (std::size_t u = 0; u < n && closed; ++u)
      if ((s >> u) & 1ULL) closed = closed_at(f, mode, cands, s, u);
    if (closed) all |= s;
  }
  return all;
}

}  // namespace mdual::testing

#endif  // MDUAL_TESTS_SUPPORT_HPP
