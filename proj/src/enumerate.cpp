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

#include "mdual/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "mdual/error.hpp"

namespace mdual {
namespace {

bool is_downset(const Poset& p, std::uint32_t d) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((d >> i & 1U) && (p[i] & ~d)) return false;
  return true;
}

std::size_t count_downsets(const Poset& p) {
  std::size_t count = 0;
  for (std::uint32_t d = 0; d < (1U << p.size()); ++d) count += is_downset(p, d);
  return count;
}

// Smallest adjacency code over all relabellings.
std::uint64_t poset_code(const Poset& p) {
  const auto k = p.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  auto best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (p[perm[i]] >> perm[j] & 1U) code |= std::uint64_t{1} << (i * k + j);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::uint32_t> permute_bits(std::size_t n) {
  // perms[π][s] = image of subset s under the π-th permutation of n points.
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      std::uint32_t t = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1U) t |= 1U << perm[i];
      out.push_back(t);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint32_t permute_relation(std::size_t n, const std::vector<std::size_t>& perm, std::uint32_t r) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r >> (i * n + j) & 1U) out |= 1U << (perm[i] * n + perm[j]);
  return out;
}

// Family of open sets as a bit per subset index.
std::uint32_t family_code(const std::vector<std::uint32_t>& opens) {
  std::uint32_t code = 0;
  for (auto u : opens) code |= 1U << u;
  return code;
}

std::uint32_t permute_family(std::size_t n, const std::uint32_t* image, std::uint32_t code) {
  std::uint32_t out = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s)
    if (code >> s & 1U) out |= 1U << image[s];
  return out;
}

}  // namespace

std::vector<Poset> posets_up_to_iso(std::size_t max_lattice_size) {
  std::vector<Poset> out;
  if (max_lattice_size == 0) return out;
  std::vector<Poset> level{Poset{}};
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<Poset> next;
    std::set<std::uint64_t> seen;
    for (const auto& p : level) {
      if (p.size() >= 8) continue;
      for (std::uint32_t d = 0; d < (1U << p.size()); ++d) {
        if (!is_downset(p, d)) continue;
        auto q = p;
        q.push_back(d);
        if (count_downsets(q) > max_lattice_size) continue;
        if (seen.insert(poset_code(q)).second) next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  return out;
}

FiniteLattice downset_lattice(const Poset& p) {
  const auto k = p.size();
  std::vector<std::uint32_t> downs;
  for (std::uint32_t d = 0; d < (1U << k); ++d)
    if (is_downset(p, d)) downs.push_back(d);
  std::stable_sort(downs.begin(), downs.end(),
                   [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  const std::uint32_t full = k == 0 ? 0 : (1U << k) - 1;
  std::vector<std::string> ids;
  for (auto d : downs) {
    if (d == 0) {
      ids.push_back(k == 0 ? "top" : "bot");
      continue;
    }
    if (d == full) {
      ids.push_back("top");
      continue;
    }
    std::string name;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(d >> i & 1U)) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < k && maximal; ++j)
        if ((d >> j & 1U) && (p[j] >> i & 1U)) maximal = false;
      if (!maximal) continue;
      if (!name.empty()) name += "+";
      name += static_cast<char>('a' + i);
    }
    ids.push_back(name);
  }
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem i = 0; i < downs.size(); ++i)
    for (Elem j = 0; j < downs.size(); ++j)
      if ((downs[i] & ~downs[j]) == 0) order.emplace_back(i, j);
  return FiniteLattice::from_order(std::move(ids), order);
}

std::vector<FiniteLattice> distributive_lattices(std::size_t max_size) {
  auto posets = posets_up_to_iso(max_size);
  std::stable_sort(posets.begin(), posets.end(), [](const Poset& a, const Poset& b) {
    return count_downsets(a) < count_downsets(b);
  });
  std::vector<FiniteLattice> out;
  for (const auto& p : posets) out.push_back(downset_lattice(p));
  return out;
}

std::vector<ModalFrame> modal_frames(const FiniteLattice& l) {
  const auto n = l.size();
  // A linear extension: fewer elements below come first.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return l.down(a).count() < l.down(b).count(); });

  std::vector<std::vector<Elem>> boxes, dias;
  std::vector<Elem> table(n);
  std::vector<char> assigned(n, 0);
  // Monotone maps, optionally meet-preserving with fixed value at one end.
  auto enumerate = [&](bool box, auto&& self, std::size_t k) -> void {
    if (k == n) {
      (box ? boxes : dias).push_back(table);
      return;
    }
    const Elem a = order[k];
    for (Elem v = 0; v < n; ++v) {
      if (box && a == l.top() && v != l.top()) continue;
      if (!box && a == l.bottom() && v != l.bottom()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const Elem b = order[i];
        if (l.leq(b, a) && !l.leq(table[b], v)) ok = false;
        if (ok && box && table[l.meet(a, b)] != l.meet(v, table[b]) && assigned[l.meet(a, b)])
          ok = false;
      }
      if (!ok) continue;
      table[a] = v;
      assigned[a] = 1;
      self(box, self, k + 1);
      assigned[a] = 0;
    }
  };
  if (n == 0) return {};
  enumerate(true, enumerate, 0);
  enumerate(false, enumerate, 0);

  std::vector<ModalFrame> out;
  for (const auto& b : boxes)
    for (const auto& d : dias) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x)
        for (Elem y = 0; y < n && ok; ++y)
          ok = l.leq(l.meet(b[x], d[y]), d[l.meet(x, y)]);
      if (ok) out.push_back(ModalFrame{l, b, d});
    }
  return out;
}

std::vector<std::vector<std::uint32_t>> topologies(std::size_t n, bool up_to_iso) {
  if (n > 4) throw Error(ErrorKind::BoundTooLarge, "topology enumeration is limited to 4 points");
  const std::uint32_t subsets = 1U << n;
  const std::uint32_t full = subsets - 1;
  const auto perms = permute_bits(n);
  const std::size_t nperms = perms.size() / subsets;
  std::vector<std::vector<std::uint32_t>> out;
  std::set<std::uint32_t> seen;
  // Free choice over the subsets other than ∅ and the carrier.
  std::vector<std::uint32_t> middle;
  for (std::uint32_t s = 1; s < full; ++s) middle.push_back(s);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    std::vector<std::uint32_t> opens{0};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (pick >> i & 1U) opens.push_back(middle[i]);
    if (full != 0) opens.push_back(full);
    const auto code = family_code(opens);
    bool closed = true;
    for (auto u : opens)
      for (auto v : opens)
        if (!(code >> (u | v) & 1U) || !(code >> (u & v) & 1U)) closed = false;
    if (!closed) continue;
    if (up_to_iso) {
      auto best = code;
      for (std::size_t k = 0; k < nperms; ++k)
        best = std::min(best, permute_family(n, &perms[k * subsets], code));
      if (!seen.insert(best).second) continue;
    }
    out.push_back(std::move(opens));
  }
  return out;
}

RelationalSpace space_from_masks(std::size_t n, const std::vector<std::uint32_t>& opens,
                                 std::uint32_t relation) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  std::vector<Subset> sets;
  for (auto u : opens) sets.push_back(subset_from_mask(n, u));
  std::vector<Subset> succ(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (relation >> (i * n + j) & 1U) succ[i].set(j);
  return RelationalSpace::from_sets(std::move(ids), std::move(sets), std::move(succ));
}

void for_each_space(std::size_t n, bool up_to_iso,
                    const std::function<void(const RelationalSpace&)>& fn) {
  if (n > 4) throw Error(ErrorKind::BoundTooLarge, "space enumeration is limited to 4 points");
  const std::uint32_t subsets = 1U << n;
  const auto images = permute_bits(n);
  std::vector<std::vector<std::size_t>> perms;
  {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (const auto& opens : topologies(n, up_to_iso)) {
    const auto code = family_code(opens);
    std::vector<std::size_t> autos;
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (permute_family(n, &images[k * subsets], code) == code) autos.push_back(k);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << (n * n)); ++r) {
      const auto rel = static_cast<std::uint32_t>(r);
      if (up_to_iso &&
          std::any_of(autos.begin(), autos.end(),
                      [&](std::size_t k) { return permute_relation(n, perms[k], rel) < rel; }))
        continue;
      fn(space_from_masks(n, opens, rel));
    }
  }
}

}  // namespace mdual
