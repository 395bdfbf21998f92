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

#ifndef MDUAL_SUBSET_HPP
#define MDUAL_SUBSET_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mdual {

// Subsets of a finite carrier (lattice elements or space points) indexed 0..n-1.
using Subset = boost::dynamic_bitset<>;

inline Subset make_subset(std::size_t n, std::initializer_list<std::size_t> members) {
  Subset s(n);
  for (auto m : members) s.set(m);
  return s;
}

inline Subset make_subset(std::size_t n, const std::vector<std::size_t>& members) {
  Subset s(n);
  for (auto m : members) s.set(m);
  return s;
}

inline Subset full_subset(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

inline std::vector<std::size_t> members(const Subset& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

// Calls fn(i) for each member in increasing order.
template <class Fn>
void for_each_member(const Subset& s, Fn&& fn) {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) fn(i);
}

// Subset from the low bits of a mask; used by the bounded exhaustive searches.
inline Subset subset_from_mask(std::size_t n, unsigned long long mask) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1ULL) s.set(i);
  return s;
}

// Total order on subsets: by cardinality, then by the sorted member list.
inline bool canonical_less(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != Subset::npos && j != Subset::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

}  // namespace mdual

#endif  // MDUAL_SUBSET_HPP
