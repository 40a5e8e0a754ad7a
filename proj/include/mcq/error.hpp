// Copyright 2026 The mcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcq {

/// Malformed graph or matrix input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(
            line == 0 ? message
                      : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A request exceeds what a backend or brute-force routine can handle
/// (register width, enumeration size, counting precision).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& message)
      : std::runtime_error(message) {}
};

/// A circuit result disagreed with its classical reference.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace mcq
