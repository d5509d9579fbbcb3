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

#include "telematch/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "telematch/errors.hpp"

namespace telematch {
namespace {

// SplitMix64 output function.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Tally {
  std::array<std::uint64_t, 4> outcomes{};
  std::array<std::uint64_t, 4> successes{};
};

Tally run_range(const std::array<double, 4>& p_alice, const std::array<double, 4>& p_bob,
                std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
  Tally t;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    const int lam = sample_outcome(p_alice, trial_uniform(seed, trial, 0));
    const auto i = static_cast<std::size_t>(lam - 1);
    ++t.outcomes[i];
    if (trial_uniform(seed, trial, 1) < p_bob[i]) ++t.successes[i];
  }
  return t;
}

}  // namespace

double trial_uniform(std::uint64_t seed, std::uint64_t trial, unsigned draw) {
  constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  const std::uint64_t counter = 2 * trial + draw + 1;
  return static_cast<double>(mix64(seed + counter * kGamma) >> 11) * 0x1.0p-53;
}

EmpiricalReport monte_carlo(const PureInputState& input, const TwoQubitChannel& ch,
                            const TwoQubitBasis& basis, const KPolicy& policy,
                            std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw InvalidValue("monte_carlo: trials must be positive");
  const ProtocolReport analytic = analytic_report(input, ch, basis, policy);
  std::array<double, 4> p_alice{};
  std::array<double, 4> p_bob{};
  for (std::size_t i = 0; i < 4; ++i) {
    p_alice[i] = analytic.outcomes[i].p_alice;
    p_bob[i] = analytic.outcomes[i].p_bob;
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers =
      static_cast<std::uint64_t>(std::min<std::uint64_t>(threads, trials));
  std::vector<Tally> tallies(workers);
  if (workers == 1) {
    tallies[0] = run_range(p_alice, p_bob, seed, 0, trials);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = trials * w / workers;
      const std::uint64_t end = trials * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        tallies[w] = run_range(p_alice, p_bob, seed, begin, end);
      });
    }
  }

  EmpiricalReport report;
  report.trials = trials;
  for (const Tally& t : tallies) {
    for (std::size_t i = 0; i < 4; ++i) {
      report.outcome_counts[i] += t.outcomes[i];
      report.success_counts[i] += t.successes[i];
    }
  }
  for (auto s : report.success_counts) report.successes += s;
  const double n = static_cast<double>(trials);
  report.estimate = static_cast<double>(report.successes) / n;
  report.standard_error = std::sqrt(report.estimate * (1.0 - report.estimate) / n);
  return report;
}

double z_score(double analytic, const EmpiricalReport& report) {
  const double diff = report.estimate - analytic;
  if (report.standard_error == 0.0) {
    if (std::abs(diff) <= 1e-12) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  return diff / report.standard_error;
}

}  // namespace telematch
