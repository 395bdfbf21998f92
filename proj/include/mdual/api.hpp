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

#ifndef MDUAL_API_HPP
#define MDUAL_API_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdual/io.hpp"

namespace mdual::api {

// JSON in, JSON out; shared by the command line and the Python module.
// Documents carrying a verdict have a boolean "pass". Invalid input throws
// mdual::Error.

using Named = std::pair<std::string, Json>;

Json validate(const Json& doc);
Json omega(const Json& space);
Json points(const Json& frame, const std::string& mode, bool trace);

// kind: spatial | sober | triangles | adjunction | duality | correspondence.
// mode may be "all".
Json check(const std::string& kind, const std::string& mode, const std::vector<Named>& inputs);

Json modelcheck(const Json& space, const Json& valuation, const std::string& formula,
                const std::optional<std::string>& point, bool allow_implication);
Json bisim(const Json& source, const Json& target, const Json& map, const Json& valuations,
           std::size_t depth, bool allow_implication);
Json idl(const Json& frame);
Json sweep(std::size_t max_lattice, std::size_t max_points, const std::vector<std::string>& modes);

// 0 when the document passes (or has no verdict), 1 otherwise.
int exit_code(const Json& doc);

// Plain-text rendering of any document above.
std::string render_human(const Json& doc);

}  // namespace mdual::api

#endif  // MDUAL_API_HPP
