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

#ifndef MDUAL_LATTICE_HPP
#define MDUAL_LATTICE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdual/subset.hpp"

namespace mdual {

using Elem = std::size_t;

// A finite bounded distributive lattice, read as a frame. Elements are the
// indices 0..size()-1; each carries a string id. The order is stored fully
// closed, one up-set and one down-set bitset per element, with meet and join
// tabulated.
class FiniteLattice {
 public:
  using LeqPair = std::pair<std::string, std::string>;

  // Empty placeholder; not a lattice until assigned from validate().
  FiniteLattice() = default;

  // Closes `leq` reflexively and transitively, then checks the partial order,
  // binary meets and joins, and distributivity. Throws Error naming the
  // offending elements.
  static FiniteLattice validate(std::vector<std::string> ids, const std::vector<LeqPair>& leq);

  // Same, from index pairs.
  static FiniteLattice from_order(std::vector<std::string> ids,
                                  const std::vector<std::pair<Elem, Elem>>& leq);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(Elem a) const { return ids_.at(a); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  Elem index_of(std::string_view id) const;

  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem big_join(const Subset& s) const;
  Elem big_meet(const Subset& s) const;
  Elem top() const noexcept { return top_; }
  Elem bottom() const noexcept { return bottom_; }

  const Subset& up(Elem a) const { return up_[a]; }
  const Subset& down(Elem a) const { return down_[a]; }
  Subset up_closure(const Subset& s) const;
  Subset down_closure(const Subset& s) const;
  Subset empty_set() const { return Subset(size()); }
  Subset all() const { return full_subset(size()); }

  // Hasse diagram edges (a covered by b), in index order.
  std::vector<std::pair<Elem, Elem>> covers() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.ids_ == b.ids_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem top_ = 0;
  Elem bottom_ = 0;
};

// A frame character p : A -> 2, carried by the prime element whose down-set
// is p^{-1}(0).
struct Character {
  Elem prime = 0;

  bool operator()(const FiniteLattice& lattice, Elem a) const { return !lattice.leq(a, prime); }
  friend auto operator<=>(const Character&, const Character&) = default;
};

// The filter ↑generator.
struct PrincipalFilter {
  Elem generator = 0;

  bool contains(const FiniteLattice& lattice, Elem c) const { return lattice.leq(generator, c); }
  friend auto operator<=>(const PrincipalFilter&, const PrincipalFilter&) = default;
};

bool is_prime(const FiniteLattice& lattice, Elem e);
std::vector<Character> characters(const FiniteLattice& lattice);
Subset char_set(const FiniteLattice& lattice, Character p);

// Sets at most this large are checked against the directed-subset
// definitions by enumerating every subset.
inline constexpr std::size_t kLiteralSubsetLimit = 16;

bool is_directed(const FiniteLattice& lattice, const Subset& s);

// Calls fn(S) for every nonempty directed subset S. For carriers above
// kLiteralSubsetLimit the enumeration is restricted to the sets {m} and
// {x, m} with x <= m: every finite directed set contains its own join, so
// these already exhaust the outcomes of the directed-join conditions
// checked in this library.
template <class Fn>
void for_each_directed_subset(const FiniteLattice& lattice, Fn&& fn);

Subset compacts(const FiniteLattice& lattice);
bool is_spectral(const FiniteLattice& lattice);
bool is_scott_open(const FiniteLattice& lattice, const Subset& f);
bool is_filter(const FiniteLattice& lattice, const Subset& f);
bool is_ideal(const FiniteLattice& lattice, const Subset& i);
std::vector<Subset> all_ideals(const FiniteLattice& lattice);

// Principal generator of a filter/ideal given as a set. Throws NotPrincipal
// naming two members whose meet (join) is missing, or a member whose
// up-set (down-set) escapes the set.
PrincipalFilter principal_filter(const FiniteLattice& lattice, const Subset& f);
Elem principal_ideal(const FiniteLattice& lattice, const Subset& i);

std::vector<Elem> join_irreducibles(const FiniteLattice& lattice);

// a ∧ ⋁S = ⋁{a ∧ s : s ∈ S} over all subsets S; enumerated up to
// kLiteralSubsetLimit elements, otherwise reduced to binary distributivity.
bool frame_law_holds(const FiniteLattice& lattice);

// --- template implementation ---

template <class Fn>
void for_each_directed_subset(const FiniteLattice& lattice, Fn&& fn) {
  const auto n = lattice.size();
  if (n <= kLiteralSubsetLimit) {
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
      auto s = subset_from_mask(n, mask);
      if (is_directed(lattice, s)) fn(s);
    }
    return;
  }
  for (Elem m = 0; m < n; ++m) {
    for_each_member(lattice.down(m), [&](Elem x) {
      Subset s(n);
      s.set(m);
      s.set(x);
      fn(s);
    });
  }
}

}  // namespace mdual

#endif  // MDUAL_LATTICE_HPP
