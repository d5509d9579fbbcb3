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

// Text literals for channels, bases, input states and K policies.
//
//   complex:  "0.6", "-1e-3", "0.6+0.8i", "0.6-0.8i", "0.8i", "-i"
//   channel:  "x00,x01,x10,x11"  or  "diag:a,b"  (a|00> + b|11>)
//   basis:    "bell"  or  "gbm:a',b'"
//   K policy: a positive real, "max" or "per-outcome"
//
// Channel, basis and input-state literals must be normalized to within
// kLiteralNormTolerance; they are then rescaled to unit norm exactly.

#include <string_view>

#include "telematch/channel.hpp"
#include "telematch/measurement.hpp"
#include "telematch/protocol.hpp"

namespace telematch {

inline constexpr double kLiteralNormTolerance = 1e-6;

double parse_real(std::string_view text);
Complex parse_complex(std::string_view text);
TwoQubitChannel parse_channel(std::string_view text);
TwoQubitBasis parse_basis(std::string_view text);
KPolicy parse_k_policy(std::string_view text);
PureInputState parse_input_state(std::string_view alpha, std::string_view beta);

}  // namespace telematch
