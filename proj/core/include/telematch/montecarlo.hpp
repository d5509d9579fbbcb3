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

#include <array>
#include <cstdint>

#include "telematch/protocol.hpp"

namespace telematch {

struct EmpiricalReport {
  std::uint64_t trials = 0;
  std::array<std::uint64_t, 4> outcome_counts{};
  std::array<std::uint64_t, 4> success_counts{};
  std::uint64_t successes = 0;
  double estimate = 0.0;
  double standard_error = 0.0;  // sqrt(p (1 - p) / trials)
};

// Uniform double in [0, 1) for draw `draw` of trial `trial`. Each trial owns
// its own stream, so results do not depend on how trials are scheduled.
double trial_uniform(std::uint64_t seed, std::uint64_t trial, unsigned draw);

// Samples Alice's outcome from the branch probabilities, then the ancilla
// from the conditional success probability. Bit-identical for a fixed seed
// regardless of `threads` (0 picks the hardware concurrency).
// Throws InvalidValue when trials == 0.
EmpiricalReport monte_carlo(const PureInputState& input, const TwoQubitChannel& ch,
                            const TwoQubitBasis& basis, const KPolicy& policy,
                            std::uint64_t trials, std::uint64_t seed,
                            unsigned threads = 1);

// (estimate - analytic) / standard_error. With a zero standard error the
// score is 0 when the two agree to 1e-12 and +-infinity otherwise.
double z_score(double analytic, const EmpiricalReport& report);

}  // namespace telematch
