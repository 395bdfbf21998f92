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

#include "mdual/error.hpp"

#include <algorithm>

namespace mdual {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::MissingMeetOrJoin: return "MissingMeetOrJoin";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotAMorphismOfMode: return "NotAMorphismOfMode";
    case ErrorKind::ImageNotAPoint: return "ImageNotAPoint";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::string> witnesses)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witnesses_(std::move(witnesses)) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string expected,
                         const std::string& found)
    : Error(ErrorKind::SyntaxError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": expected " + expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

}  // namespace mdual
