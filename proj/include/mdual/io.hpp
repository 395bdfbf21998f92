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

#ifndef MDUAL_IO_HPP
#define MDUAL_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "mdual/duality.hpp"
#include "mdual/formula.hpp"
#include "mdual/modal_frame.hpp"
#include "mdual/omega.hpp"
#include "mdual/points.hpp"
#include "mdual/space.hpp"

namespace mdual {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Parse errors and unreadable files become InvalidInput.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

// {"elements": [id, ...], "leq": [[a, b], ...]}; leq need not be closed.
FiniteLattice lattice_from_json(const Json& j);
// Emits the covering pairs only.
Json lattice_to_json(const FiniteLattice& l);

// {"lattice": {...}, "box": {id: id, ...}, "dia": {...}}
ModalFrame frame_from_json(const Json& j);
// Lattice validated and tables total, axioms not yet checked.
ModalFrame frame_tables_from_json(const Json& j);
Json frame_to_json(const ModalFrame& f);

// {"points": [id, ...], "opens": [[id, ...], ...], "relation": [[a, b], ...]}
RelationalSpace space_from_json(const Json& j);
Json space_to_json(const RelationalSpace& s);

// {"map": {id: id, ...}}, total on the source.
std::vector<Elem> frame_map_from_json(const Json& j, const FiniteLattice& source,
                                      const FiniteLattice& target);
std::vector<Point> space_map_from_json(const Json& j, const RelationalSpace& source,
                                       const RelationalSpace& target);
Json frame_map_to_json(const FiniteLattice& source, const FiniteLattice& target,
                       const std::vector<Elem>& map);
Json space_map_to_json(const RelationalSpace& source, const RelationalSpace& target,
                       const std::vector<Point>& map);

// {var: [point, ...], ...}; every image must be open.
Valuation valuation_from_json(const Json& j, const RelationalSpace& s);
Json valuation_to_json(const RelationalSpace& s, const Valuation& v);

Json points_json(const RelationalSpace& s, const Subset& u);

Json to_json(const Check& c);
Json to_json(const std::vector<Check>& cs);
Json to_json(const Error& e);
Json to_json(const FrameClass& c);
Json to_json(const SpaceClass& c);
Json to_json(const MorphismClass& c, const FiniteLattice& source);
Json to_json(const SpaceMorphismClass& c);
Json to_json(const Verdict& v);
Json to_json(const DualityReport& r);
Json to_json(const CorrespondenceReport& r);
Json to_json(const OmegaClassReport& r);
Json to_json(const PointSpace& fa, bool with_trace);

// What a JSON document holds: "frame", "space", "lattice" or "" if unknown.
std::string detect_kind(const Json& j);

}  // namespace mdual

#endif  // MDUAL_IO_HPP
