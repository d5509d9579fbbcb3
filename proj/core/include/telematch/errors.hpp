// Copyright 2026 The telematch Authors
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

#include <stdexcept>
#include <string>

namespace telematch {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit (matrix-vector product, tensor, etc.).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// NaN/Inf entries, non-power-of-two dimensions, unnormalized states.
class InvalidValue : public Error {
 public:
  using Error::Error;
};

// A generalized Bell basis whose weights are not normalized, or that is
// degenerate (a' = 0 or b' = 0) where the protocol needs entanglement.
class InvalidBasis : public Error {
 public:
  using Error::Error;
};

// Singular channel parameter matrix: no teleportation is possible.
class UnteleportableChannel : public Error {
 public:
  using Error::Error;
};

// The matching protocol is only defined for channels a|00> + b|11>.
class UnsupportedChannel : public Error {
 public:
  using Error::Error;
};

// The matching coefficient would make the corrective unitary non-unitary.
class KOutOfRange : public Error {
 public:
  using Error::Error;
};

// Malformed channel/basis/complex/K literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace telematch
