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

#ifndef MDUAL_SWEEP_HPP
#define MDUAL_SWEEP_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mdual/error.hpp"
#include "mdual/modal_frame.hpp"
#include "mdual/points.hpp"
#include "mdual/space.hpp"

namespace mdual {

// Guardrails for exhaustive enumeration.
inline constexpr std::size_t kMaxSweepLattice = 8;
inline constexpr std::size_t kMaxSweepPoints = 4;

// Whether φ_A is expected to be an isomorphism for this
// frame in this mode.
bool spatiality_expected(const ModalFrame& frame, Mode mode);

// Every invariant the library asserts about a single frame, per mode. Check
// names are "<suite>/<mode>"; premise is false where the suite does not
// apply.
std::vector<Check> frame_invariants(const ModalFrame& frame, std::span<const Mode> modes);

// The Ω implications, plus spatiality of ΩX and the space triangle in
// every mode whose category contains X.
std::vector<Check> space_invariants(const RelationalSpace& space, std::span<const Mode> modes);

struct SweepOptions {
  std::size_t max_lattice = 4;
  std::size_t max_points = 2;
  std::vector<Mode> modes;  // empty means all
};

struct SuiteTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;
  std::string first_failure;
};

struct SweepReport {
  SweepOptions options;
  std::size_t lattices = 0;
  std::size_t frames = 0;
  std::size_t spaces = 0;
  std::map<std::string, SuiteTally> suites;

  bool pass() const;
};

// Throws BoundTooLarge above kMaxSweepLattice / kMaxSweepPoints.
SweepReport sweep(const SweepOptions& options);

}  // namespace mdual

#endif  // MDUAL_SWEEP_HPP
