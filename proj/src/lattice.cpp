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

#include "mdual/lattice.hpp"

#include <algorithm>
#include <optional>

#include "mdual/error.hpp"

namespace mdual {

namespace {

std::optional<Elem> greatest_in(const std::vector<Subset>& down, const Subset& s) {
  for (auto m = s.find_first(); m != Subset::npos; m = s.find_next(m))
    if (s.is_subset_of(down[m])) return m;
  return std::nullopt;
}

}  // namespace

FiniteLattice FiniteLattice::validate(std::vector<std::string> ids,
                                      const std::vector<LeqPair>& leq) {
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < ids.size(); ++i) {
    if (!index.emplace(ids[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate element id '" + ids[i] + "'", {ids[i]});
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(leq.size());
  for (const auto& [a, b] : leq) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + a + "'", {a});
    if (ib == index.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + b + "'", {b});
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_order(std::move(ids), pairs);
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> ids,
                                        const std::vector<std::pair<Elem, Elem>>& leq) {
  const auto n = ids.size();
  FiniteLattice l;
  for (Elem i = 0; i < n; ++i) {
    if (!l.index_.emplace(ids[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate element id '" + ids[i] + "'", {ids[i]});
  }
  l.ids_ = std::move(ids);
  if (n == 0) throw Error(ErrorKind::MissingMeetOrJoin, "empty carrier has no top or bottom");

  l.up_.assign(n, Subset(n));
  for (Elem i = 0; i < n; ++i) l.up_[i].set(i);
  for (auto [a, b] : leq) {
    if (a >= n || b >= n) throw Error(ErrorKind::UnknownElement, "order pair out of range");
    l.up_[a].set(b);
  }
  // Warshall, row-wise: if k ∈ up(i) then up(k) ⊆ up(i).
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (l.up_[i].test(k)) l.up_[i] |= l.up_[k];

  l.down_.assign(n, Subset(n));
  for (Elem a = 0; a < n; ++a)
    for_each_member(l.up_[a], [&](Elem b) { l.down_[b].set(a); });

  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (l.up_[a].test(b) && l.up_[b].test(a))
        throw Error(ErrorKind::NotAPartialOrder,
                    "antisymmetry fails: '" + l.ids_[a] + "' <= '" + l.ids_[b] + "' <= '" +
                        l.ids_[a] + "'",
                    {l.ids_[a], l.ids_[b]});

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      auto m = greatest_in(l.down_, l.down_[a] & l.down_[b]);
      if (!m)
        throw Error(ErrorKind::MissingMeetOrJoin,
                    "no meet of '" + l.ids_[a] + "' and '" + l.ids_[b] + "'",
                    {l.ids_[a], l.ids_[b]});
      auto j = greatest_in(l.up_, l.up_[a] & l.up_[b]);
      if (!j)
        throw Error(ErrorKind::MissingMeetOrJoin,
                    "no join of '" + l.ids_[a] + "' and '" + l.ids_[b] + "'",
                    {l.ids_[a], l.ids_[b]});
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
    }
  }
  l.top_ = 0;
  l.bottom_ = 0;
  for (Elem a = 1; a < n; ++a) {
    l.top_ = l.join(l.top_, a);
    l.bottom_ = l.meet(l.bottom_, a);
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = b; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          throw Error(ErrorKind::NotDistributive,
                      "a∧(b∨c) ≠ (a∧b)∨(a∧c) for a='" + l.ids_[a] + "', b='" + l.ids_[b] +
                          "', c='" + l.ids_[c] + "'",
                      {l.ids_[a], l.ids_[b], l.ids_[c]});
  return l;
}

Elem FiniteLattice::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end())
    throw Error(ErrorKind::UnknownElement, "unknown element '" + std::string(id) + "'",
                {std::string(id)});
  return it->second;
}

Elem FiniteLattice::big_join(const Subset& s) const {
  Elem acc = bottom_;
  for_each_member(s, [&](Elem a) { acc = join(acc, a); });
  return acc;
}

Elem FiniteLattice::big_meet(const Subset& s) const {
  Elem acc = top_;
  for_each_member(s, [&](Elem a) { acc = meet(acc, a); });
  return acc;
}

Subset FiniteLattice::up_closure(const Subset& s) const {
  Subset out(size());
  for_each_member(s, [&](Elem a) { out |= up_[a]; });
  return out;
}

Subset FiniteLattice::down_closure(const Subset& s) const {
  Subset out(size());
  for_each_member(s, [&](Elem a) { out |= down_[a]; });
  return out;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < size(); ++a) {
    for_each_member(up_[a], [&](Elem b) {
      if (a == b) return;
      // b covers a iff nothing lies strictly between.
      Subset between = up_[a] & down_[b];
      if (between.count() == 2) out.emplace_back(a, b);
    });
  }
  return out;
}

bool is_prime(const FiniteLattice& lattice, Elem e) {
  if (e == lattice.top()) return false;
  const auto n = lattice.size();
  for (Elem a = 0; a < n; ++a) {
    if (lattice.leq(a, e)) continue;
    for (Elem b = 0; b < n; ++b)
      if (!lattice.leq(b, e) && lattice.leq(lattice.meet(a, b), e)) return false;
  }
  return true;
}

std::vector<Character> characters(const FiniteLattice& lattice) {
  std::vector<Character> out;
  for (Elem e = 0; e < lattice.size(); ++e)
    if (is_prime(lattice, e)) out.push_back(Character{e});
  return out;
}

Subset char_set(const FiniteLattice& lattice, Character p) {
  Subset s = lattice.down(p.prime);
  s.flip();
  return s;
}

bool is_directed(const FiniteLattice& lattice, const Subset& s) {
  if (s.none()) return false;
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a))
    for (auto b = s.find_next(a); b != Subset::npos; b = s.find_next(b))
      if ((lattice.up(a) & lattice.up(b) & s).none()) return false;
  return true;
}

Subset compacts(const FiniteLattice& lattice) {
  Subset out = lattice.all();
  for_each_directed_subset(lattice, [&](const Subset& s) {
    const Elem j = lattice.big_join(s);
    for_each_member(lattice.down(j), [&](Elem a) {
      if (!out.test(a)) return;
      if ((lattice.up(a) & s).none()) out.reset(a);
    });
  });
  return out;
}

bool is_spectral(const FiniteLattice& lattice) {
  const Subset k = compacts(lattice);
  if (!k.test(lattice.top())) return false;
  for (auto a = k.find_first(); a != Subset::npos; a = k.find_next(a))
    for (auto b = k.find_next(a); b != Subset::npos; b = k.find_next(b))
      if (!k.test(lattice.meet(a, b))) return false;
  for (Elem a = 0; a < lattice.size(); ++a)
    if (lattice.big_join(k & lattice.down(a)) != a) return false;
  return true;
}

bool is_scott_open(const FiniteLattice& lattice, const Subset& f) {
  bool ok = true;
  for_each_directed_subset(lattice, [&](const Subset& s) {
    if (ok && f.test(lattice.big_join(s)) && !s.intersects(f)) ok = false;
  });
  return ok;
}

bool is_filter(const FiniteLattice& lattice, const Subset& f) {
  if (f.none()) return false;
  if (lattice.up_closure(f) != f) return false;
  for (auto a = f.find_first(); a != Subset::npos; a = f.find_next(a))
    for (auto b = f.find_next(a); b != Subset::npos; b = f.find_next(b))
      if (!f.test(lattice.meet(a, b))) return false;
  return true;
}

bool is_ideal(const FiniteLattice& lattice, const Subset& i) {
  if (i.none()) return false;
  if (lattice.down_closure(i) != i) return false;
  for (auto a = i.find_first(); a != Subset::npos; a = i.find_next(a))
    for (auto b = i.find_next(a); b != Subset::npos; b = i.find_next(b))
      if (!i.test(lattice.join(a, b))) return false;
  return true;
}

std::vector<Subset> all_ideals(const FiniteLattice& lattice) {
  const auto n = lattice.size();
  std::vector<Subset> out;
  if (n <= kLiteralSubsetLimit) {
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
      auto s = subset_from_mask(n, mask);
      if (is_ideal(lattice, s)) out.push_back(std::move(s));
    }
  } else {
    for (Elem a = 0; a < n; ++a) out.push_back(lattice.down(a));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

PrincipalFilter principal_filter(const FiniteLattice& lattice, const Subset& f) {
  if (f.none()) throw Error(ErrorKind::NotPrincipal, "empty set is not a filter");
  for (auto a = f.find_first(); a != Subset::npos; a = f.find_next(a)) {
    if (!lattice.up(a).is_subset_of(f))
      throw Error(ErrorKind::NotPrincipal,
                  "set is not upward closed at '" + lattice.id(a) + "'", {lattice.id(a)});
    for (auto b = f.find_next(a); b != Subset::npos; b = f.find_next(b))
      if (!f.test(lattice.meet(a, b)))
        throw Error(ErrorKind::NotPrincipal,
                    "meet of '" + lattice.id(a) + "' and '" + lattice.id(b) + "' is missing",
                    {lattice.id(a), lattice.id(b)});
  }
  return PrincipalFilter{lattice.big_meet(f)};
}

Elem principal_ideal(const FiniteLattice& lattice, const Subset& i) {
  if (i.none()) throw Error(ErrorKind::NotPrincipal, "empty set is not an ideal");
  for (auto a = i.find_first(); a != Subset::npos; a = i.find_next(a)) {
    if (!lattice.down(a).is_subset_of(i))
      throw Error(ErrorKind::NotPrincipal,
                  "set is not downward closed at '" + lattice.id(a) + "'", {lattice.id(a)});
    for (auto b = i.find_next(a); b != Subset::npos; b = i.find_next(b))
      if (!i.test(lattice.join(a, b)))
        throw Error(ErrorKind::NotPrincipal,
                    "join of '" + lattice.id(a) + "' and '" + lattice.id(b) + "' is missing",
                    {lattice.id(a), lattice.id(b)});
  }
  return lattice.big_join(i);
}

std::vector<Elem> join_irreducibles(const FiniteLattice& lattice) {
  std::vector<Elem> out;
  for (Elem a = 0; a < lattice.size(); ++a) {
    if (a == lattice.bottom()) continue;
    Subset below = lattice.down(a);
    below.reset(a);
    if (lattice.big_join(below) != a) out.push_back(a);
  }
  return out;
}

bool frame_law_holds(const FiniteLattice& lattice) {
  const auto n = lattice.size();
  if (n > kLiteralSubsetLimit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (lattice.meet(a, lattice.join(b, c)) !=
              lattice.join(lattice.meet(a, b), lattice.meet(a, c)))
            return false;
    return true;
  }
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    auto s = subset_from_mask(n, mask);
    const Elem js = lattice.big_join(s);
    for (Elem a = 0; a < n; ++a) {
      Elem rhs = lattice.bottom();
      for_each_member(s, [&](Elem x) { rhs = lattice.join(rhs, lattice.meet(a, x)); });
      if (lattice.meet(a, js) != rhs) return false;
    }
  }
  return true;
}

}  // namespace mdual
