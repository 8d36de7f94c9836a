// Copyright 2026 The Authors.
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

#ifndef VAMOS_ERRORS_HPP
#define VAMOS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vamos {

/// Raised when caller-supplied data violates a documented precondition
/// (bad JSON, malformed rational, hypergraph out of range, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what)
      : std::runtime_error("input error: " + what) {}
};

/// Raised when a numeric computation cannot deliver what was asked for
/// (non-hyperbolic restriction, eigensolver failure, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what)
      : std::runtime_error("numeric error: " + what) {}
};

/// Raised when an internal invariant is violated; always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what)
      : std::logic_error("internal error: " + what) {}
};

}  // namespace vamos

#endif  // VAMOS_ERRORS_HPP
