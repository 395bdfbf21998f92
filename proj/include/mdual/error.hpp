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

#ifndef MDUAL_ERROR_HPP
#define MDUAL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdual {

enum class ErrorKind {
  InvalidInput,
  UnknownElement,
  NotAPartialOrder,
  MissingMeetOrJoin,
  NotDistributive,
  NotPrincipal,
  NotMonotone,
  AxiomViolation,
  UnknownPoint,
  NotATopology,
  NotContinuous,
  NotAMorphismOfMode,
  ImageNotAPoint,
  NoWitness,
  PreconditionViolated,
  SyntaxError,
  UndeclaredVariable,
  BoundTooLarge,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports. `witnesses` names the offending
// elements, points or axiom ids, in the order the message mentions them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witnesses = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witnesses_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected,
              const std::string& found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

// A named self-check. `premise` is false when the check does not apply, in
// which case it passes vacuously.
struct Check {
  std::string name;
  bool premise = true;
  bool holds = true;
  std::string detail;

  bool ok() const noexcept { return !premise || holds; }
};

bool all_ok(const std::vector<Check>& checks);

}  // namespace mdual

#endif  // MDUAL_ERROR_HPP
