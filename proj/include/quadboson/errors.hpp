// Copyright 2026 The quadboson authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadboson {

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, index out of range, bad parameters.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A stiffness matrix violates the spring-network sign convention
/// (positive off-diagonal entry, or negative diagonal slack).
class SignConventionError : public Error {
 public:
  using Error::Error;
};

/// A shifted adjacency matrix is not positive semidefinite.
class NotPSDError : public Error {
 public:
  using Error::Error;
};

/// The unnormalized amplitude list is identically zero.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// A requested computation exceeds the configured size caps.
class ScaleError : public Error {
 public:
  ScaleError(const std::string& what, std::int64_t required, std::int64_t cap)
      : Error(what + " (required " + std::to_string(required) + ", cap " +
              std::to_string(cap) + ")"),
        required_size(required),
        cap_size(cap) {}
  std::int64_t required_size;
  std::int64_t cap_size;
};

/// No reconstruction path exists for the requested moment.
class NotReconstructibleError : public Error {
 public:
  using Error::Error;
};

/// The circuit never produces amplitude on the postselected branch.
class PostselectionImpossibleError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical procedure failed to converge or overflowed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An input file could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace quadboson
