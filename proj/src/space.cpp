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

#include "mdual/space.hpp"

#include <algorithm>

#include "mdual/error.hpp"

namespace mdual {

std::string set_name(const RelationalSpace& s, const Subset& u) {
  std::string out = "{";
  bool first = true;
  for_each_member(u, [&](Point x) {
    if (!first) out += ",";
    out += s.id(x);
    first = false;
  });
  return out + "}";
}

RelationalSpace RelationalSpace::validate(std::vector<std::string> points,
                                          const std::vector<std::vector<std::string>>& opens,
                                          const std::vector<Pair>& relation) {
  std::unordered_map<std::string, Point> index;
  for (Point i = 0; i < points.size(); ++i)
    if (!index.emplace(points[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate point id '" + points[i] + "'", {points[i]});
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorKind::UnknownPoint, "unknown point '" + id + "'", {id});
    return it->second;
  };
  const auto n = points.size();
  std::vector<Subset> sets;
  for (const auto& open : opens) {
    Subset u(n);
    for (const auto& id : open) u.set(lookup(id));
    sets.push_back(std::move(u));
  }
  std::vector<Subset> succ(n, Subset(n));
  for (const auto& [a, b] : relation) succ[lookup(a)].set(lookup(b));
  return from_sets(std::move(points), std::move(sets), std::move(succ));
}

RelationalSpace RelationalSpace::from_sets(std::vector<std::string> points,
                                           std::vector<Subset> opens,
                                           std::vector<Subset> successors) {
  RelationalSpace s;
  const auto n = points.size();
  for (Point i = 0; i < n; ++i)
    if (!s.index_.emplace(points[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate point id '" + points[i] + "'", {points[i]});
  s.ids_ = std::move(points);
  if (successors.size() != n) throw Error(ErrorKind::InvalidInput, "relation rows must cover every point");
  for (const auto& row : successors)
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "relation row has the wrong width");
  for (const auto& u : opens)
    if (u.size() != n) throw Error(ErrorKind::InvalidInput, "open set has the wrong width");
  std::sort(opens.begin(), opens.end(), canonical_less);
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  s.opens_ = std::move(opens);
  s.succ_ = std::move(successors);
  for (std::size_t i = 0; i < s.opens_.size(); ++i) s.open_index_.emplace(s.opens_[i], i);

  if (!s.is_open(Subset(n)))
    throw Error(ErrorKind::NotATopology, "the empty set is not open", {"{}"});
  if (!s.is_open(full_subset(n)))
    throw Error(ErrorKind::NotATopology, "the whole carrier is not open", {set_name(s, full_subset(n))});
  for (std::size_t i = 0; i < s.opens_.size(); ++i)
    for (std::size_t j = i + 1; j < s.opens_.size(); ++j) {
      const auto& u = s.opens_[i];
      const auto& v = s.opens_[j];
      const char* what = !s.is_open(u | v) ? "union" : !s.is_open(u & v) ? "intersection" : nullptr;
      if (what)
        throw Error(ErrorKind::NotATopology,
                    std::string(what) + " of " + set_name(s, u) + " and " + set_name(s, v) +
                        " is not open",
                    {set_name(s, u), set_name(s, v)});
    }
  return s;
}

Point RelationalSpace::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end())
    throw Error(ErrorKind::UnknownPoint, "unknown point '" + std::string(id) + "'", {std::string(id)});
  return it->second;
}

std::size_t RelationalSpace::open_position(const Subset& u) const {
  auto it = open_index_.find(u);
  if (it == open_index_.end())
    throw Error(ErrorKind::InvalidInput, "set " + set_name(*this, u) + " is not open");
  return it->second;
}

std::vector<Subset> generate_topology(std::size_t n, const std::vector<Subset>& basis) {
  std::set<Subset> family{Subset(n), full_subset(n)};
  for (const auto& b : basis) family.insert(b);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> current(family.begin(), family.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        grew |= family.insert(current[i] | current[j]).second;
        grew |= family.insert(current[i] & current[j]).second;
      }
  }
  std::vector<Subset> out(family.begin(), family.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Subset box_class(const RelationalSpace& s, const Subset& u) {
  Subset out(s.size());
  for (Point x = 0; x < s.size(); ++x)
    if (s.successors(x).is_subset_of(u)) out.set(x);
  return out;
}

Subset dia_class(const RelationalSpace& s, const Subset& u) {
  Subset out(s.size());
  for (Point x = 0; x < s.size(); ++x)
    if (s.successors(x).intersects(u)) out.set(x);
  return out;
}

Subset interior(const RelationalSpace& s, const Subset& u) {
  Subset out(s.size());
  for (const auto& o : s.opens())
    if (o.is_subset_of(u)) out |= o;
  return out;
}

Subset closure(const RelationalSpace& s, const Subset& u) {
  return ~interior(s, ~u);
}

Subset saturation(const RelationalSpace& s, const Subset& u) {
  Subset out = s.all();
  for (const auto& o : s.opens())
    if (u.is_subset_of(o)) out &= o;
  return out;
}

bool specialization_leq(const RelationalSpace& s, Point x, Point y) {
  for (const auto& o : s.opens())
    if (o.test(x) && !o.test(y)) return false;
  return true;
}

bool is_closed(const RelationalSpace& s, const Subset& u) { return s.is_open(~u); }

bool is_saturated(const RelationalSpace& s, const Subset& u) {
  for (Point x = 0; x < s.size(); ++x) {
    if (!u.test(x)) continue;
    for (Point y = 0; y < s.size(); ++y)
      if (!u.test(y) && specialization_leq(s, x, y)) return false;
  }
  return true;
}

bool is_lens(const RelationalSpace& s, const Subset& u) {
  Subset up(s.size());
  for (Point y = 0; y < s.size(); ++y)
    for_each_member(u, [&](Point x) {
      if (specialization_leq(s, x, y)) up.set(y);
    });
  return (closure(s, u) & up) == u;
}

SpaceClass classify_space(const RelationalSpace& s) {
  SpaceClass c;
  c.usc = c.lsc = true;
  for (const auto& u : s.opens()) {
    c.usc = c.usc && s.is_open(box_class(s, u));
    c.lsc = c.lsc && s.is_open(dia_class(s, u));
  }
  c.continuous = c.usc && c.lsc;
  c.serial = c.reflexive = c.symmetric = c.transitive = true;
  for (Point x = 0; x < s.size(); ++x) {
    const auto& succ = s.successors(x);
    c.serial = c.serial && succ.any();
    c.reflexive = c.reflexive && succ.test(x);
    for_each_member(succ, [&](Point y) {
      c.symmetric = c.symmetric && s.related(y, x);
      c.transitive = c.transitive && s.successors(y).is_subset_of(succ);
    });
  }
  c.equivalence_space = c.continuous && c.reflexive && c.symmetric && c.transitive;
  return c;
}

std::string_view to_string(MorphismLevel level) {
  switch (level) {
    case MorphismLevel::NotContinuous: return "not_continuous";
    case MorphismLevel::Continuous: return "continuous";
    case MorphismLevel::Relational: return "relational";
    case MorphismLevel::PMorphism: return "p_morphism";
    case MorphismLevel::PQMorphism: return "pq_morphism";
  }
  return "?";
}

Subset preimage(std::span<const Point> map, std::size_t source_size, const Subset& u) {
  Subset out(source_size);
  for (Point x = 0; x < source_size; ++x)
    if (u.test(map[x])) out.set(x);
  return out;
}

Subset image(std::span<const Point> map, std::size_t target_size, const Subset& u) {
  Subset out(target_size);
  for_each_member(u, [&](Point x) { out.set(map[x]); });
  return out;
}

SpaceMorphismClass classify_space_morphism(const RelationalSpace& src, const RelationalSpace& tgt,
                                           std::span<const Point> f) {
  if (f.size() != src.size())
    throw Error(ErrorKind::InvalidInput, "space morphism map is not total");
  for (auto y : f)
    if (y >= tgt.size()) throw Error(ErrorKind::UnknownPoint, "space morphism value out of range");
  SpaceMorphismClass c;
  const auto n = src.size();
  c.continuous = true;
  for (const auto& u : tgt.opens())
    if (!src.is_open(preimage(f, n, u))) {
      c.continuous = false;
      c.witnesses.push_back("preimage of open " + set_name(tgt, u) + " is not open");
      break;
    }
  c.forward = true;
  for (Point x = 0; x < n && c.forward; ++x)
    for_each_member(src.successors(x), [&](Point y) {
      if (c.forward && !tgt.related(f[x], f[y])) {
        c.forward = false;
        c.witnesses.push_back("forward: " + src.id(x) + " R " + src.id(y) + " but not " +
                              tgt.id(f[x]) + " S " + tgt.id(f[y]));
      }
    });
  c.back_p = c.back_q = true;
  for (Point x = 0; x < n; ++x) {
    const auto& image_succ = tgt.successors(f[x]);
    for (const auto& u : tgt.opens()) {
      const Subset pre = preimage(f, n, u);
      if (c.back_p && image_succ.intersects(u) && !src.successors(x).intersects(pre)) {
        c.back_p = false;
        const auto y = (image_succ & u).find_first();
        c.witnesses.push_back("p: " + tgt.id(f[x]) + " S " + tgt.id(y) + " ∈ " + set_name(tgt, u) +
                              " but no successor of " + src.id(x) + " maps into it");
      }
      if (c.back_q && !image_succ.is_subset_of(u) && src.successors(x).is_subset_of(pre)) {
        c.back_q = false;
        const auto y = (image_succ - u).find_first();
        c.witnesses.push_back("q: " + tgt.id(f[x]) + " S " + tgt.id(y) + " ∉ " + set_name(tgt, u) +
                              " but every successor of " + src.id(x) + " maps into it");
      }
    }
  }
  c.open_map = true;
  for (const auto& u : src.opens())
    if (!tgt.is_open(image(f, tgt.size(), u))) {
      c.open_map = false;
      break;
    }
  if (!c.continuous) c.level = MorphismLevel::NotContinuous;
  else if (!c.forward) c.level = MorphismLevel::Continuous;
  else if (!c.back_p) c.level = MorphismLevel::Relational;
  else if (!c.back_q) c.level = MorphismLevel::PMorphism;
  else c.level = MorphismLevel::PQMorphism;
  return c;
}

bool at_least(const SpaceMorphismClass& cls, MorphismLevel required) {
  return static_cast<int>(cls.level) >= static_cast<int>(required);
}

}  // namespace mdual
