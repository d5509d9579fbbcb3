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

// Probabilistic teleportation through a partially entangled channel
// a|00> + b|11>: Alice measures particles (1, 2) in a (generalized) Bell
// basis, Bob attaches an ancilla |0>_A, applies a unitary matched to his
// branch with coefficient K, and keeps the run when the ancilla reads 0.

#include <array>
#include <variant>
#include <vector>

#include "telematch/channel.hpp"
#include "telematch/measurement.hpp"
#include "telematch/qlinalg.hpp"

namespace telematch {

// Relative slack granted at the upper end of the K range so that a K
// computed as 1/|c| is accepted despite rounding.
inline constexpr double kKRelativeSlack = 1e-12;

// Largest admissible K for a branch pair: min(1/|c0|, 1/|c1|).
double k_bound(Complex c0, Complex c1);

// Entanglement matching coefficient validated against one branch pair.
class MatchCoefficient {
 public:
  // Throws KOutOfRange unless 0 < k <= k_bound(c0, c1) (up to kKRelativeSlack).
  MatchCoefficient(double k, Complex c0, Complex c1);

  double value() const { return k_; }

 private:
  double k_;
};

struct FixedK {
  double k;
};
// One K for all four branches: the smallest branch bound.
struct MaxGlobal {};
// Each branch uses its own bound.
struct MaxPerOutcome {};

using KPolicy = std::variant<FixedK, MaxGlobal, MaxPerOutcome>;

// Bob's branch for outcome lambda is scale * (c0 R_first, +-c1 R_second),
// where (R_first, R_second) is (alpha, beta), or (beta, alpha) when swapped.
// The sign and the swap are undone by pauli_correction(lambda).
struct BranchCoefficients {
  Complex c0;
  Complex c1;
  double scale;
  bool swapped;
};

// Throws UnsupportedChannel for non-diagonal channels, UnteleportableChannel
// for singular ones and InvalidBasis when a' or b' vanishes.
void validate_protocol_inputs(const TwoQubitChannel& ch, const TwoQubitBasis& basis);

BranchCoefficients branch_coefficients(const TwoQubitChannel& ch,
                                       const TwoQubitBasis& basis, int lam);

// 4x4 unitary on (A, 3), ancilla most significant:
//
//   [ K c1   0      s1       0      ]
//   [ 0      K c0   0        s0     ]     s_i = sqrt(1 - (K |c_i|)^2)
//   [ s1     0     -K c1*    0      ]
//   [ 0      s0     0       -K c0*  ]
//
// Applied to |0>_A (c0 x|0> + c1 y|1>) the A=0 component is K c0 c1 (x, y).
// For real coefficients the conjugates are no-ops.
CMatrix matched_unitary(Complex c0, Complex c1, double k);

// |0>_A (x) bob.
CVector attach_ancilla(const CVector& bob);

struct AncillaOutcome {
  double p_success;        // ||A=0 part||^2 / ||state||^2
  CVector success_state;   // normalized Bob qubit given A=0 (zero if impossible)
  CVector fail_state;      // normalized Bob qubit given A=1 (zero if impossible)
};

// Throws InvalidValue for a zero-norm input.
AncillaOutcome evolve_and_measure(const CVector& state4, const CMatrix& u);

// 1 -> I, 2 -> Z, 3 -> X, 4 -> Z X.
CMatrix pauli_correction(int lam);

struct OutcomeReport {
  int lam = 0;
  double k_used = 0.0;
  double p_alice = 0.0;
  double p_bob = 0.0;
  double p_joint = 0.0;
  double fidelity = 0.0;
};

struct ProtocolReport {
  std::array<OutcomeReport, 4> outcomes;
  double total = 0.0;
};

// Largest field-wise absolute difference.
double max_abs_diff(const ProtocolReport& a, const ProtocolReport& b);

// K per outcome under a policy. FixedK must be valid for every branch.
std::array<double, 4> resolve_k(const TwoQubitChannel& ch, const TwoQubitBasis& basis,
                                const KPolicy& policy);

double optimal_k(const TwoQubitChannel& ch, const TwoQubitBasis& basis, int lam);

// Closed-form probabilities.
ProtocolReport analytic_report(const PureInputState& input, const TwoQubitChannel& ch,
                               const TwoQubitBasis& basis, const KPolicy& policy);

// State-vector run of the whole protocol: project the three-qubit state,
// attach the ancilla, evolve, measure, correct, compare with the input.
ProtocolReport simulate_report(const PureInputState& input, const TwoQubitChannel& ch,
                               const TwoQubitBasis& basis, const KPolicy& policy);

// Success probability of the optimal (K = 1/a), K = 1 and K = sqrt(2)
// unitaries for the channel sqrt(1 - b^2)|00> + b|11>.
struct Fig1Row {
  double b;
  double p_opt;     // 2 b^2
  double p_k1;      // 2 (a b)^2
  double p_ksqrt2;  // 4 (a b)^2
};

inline constexpr double kFig1LowerB = 1e-6;

Fig1Row fig1_row(double b);
// steps >= 2 evenly spaced b from kFig1LowerB to 1/sqrt(2), endpoint included.
std::vector<Fig1Row> fig1_data(int steps);

}  // namespace telematch
