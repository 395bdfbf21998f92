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

#ifndef MDUAL_ENUMERATE_HPP
#define MDUAL_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mdual/lattice.hpp"
#include "mdual/modal_frame.hpp"
#include "mdual/space.hpp"

namespace mdual {

// Finite posets on k elements as strict-below masks: below[i] has bit j
// set iff j < i. Elements are numbered along a linear extension.
using Poset = std::vector<std::uint32_t>;

// One representative per isomorphism class of posets whose down-set
// lattice has at most `max_lattice_size` elements.
std::vector<Poset> posets_up_to_iso(std::size_t max_lattice_size);

// The lattice of down-sets of `poset`, elements named by their
// join-irreducible generators ("{a,b}").
FiniteLattice downset_lattice(const Poset& poset);

// Every distributive lattice with at most `max_size` elements, once per
// isomorphism class, by increasing size.
std::vector<FiniteLattice> distributive_lattices(std::size_t max_size);

// Every box/dia table pair on `lattice` passing monotonicity and axioms 4-7.
std::vector<ModalFrame> modal_frames(const FiniteLattice& lattice);

// Every topology on points 0..n-1 as a family of bitmasks; n ≤ 4.
std::vector<std::vector<std::uint32_t>> topologies(std::size_t n, bool up_to_iso);

// Calls fn on every relational space with n points (ids x0..). With
// `up_to_iso`, one space per isomorphism class. Throws BoundTooLarge for
// n > 4.
void for_each_space(std::size_t n, bool up_to_iso,
                    const std::function<void(const RelationalSpace&)>& fn);

RelationalSpace space_from_masks(std::size_t n, const std::vector<std::uint32_t>& opens,
                                 std::uint32_t relation_mask);

}  // namespace mdual

#endif  // MDUAL_ENUMERATE_HPP
