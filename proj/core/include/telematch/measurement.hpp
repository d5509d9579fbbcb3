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

#include "telematch/channel.hpp"
#include "telematch/qlinalg.hpp"

namespace telematch {

enum class BasisKind { StandardBell, GeneralizedBell };

// Four orthonormal two-qubit states phi^1..phi^4 on Alice's particles (1, 2).
// Row lambda-1 of transform() lists the coefficients of phi^lambda on
// |00>, |01>, |10>, |11>.
class TwoQubitBasis {
 public:
  BasisKind kind() const { return kind_; }
  // Weights (a', b'); 1/sqrt(2) each for the standard Bell basis.
  double a_prime() const { return a_prime_; }
  double b_prime() const { return b_prime_; }

  // lam in 1..4.
  const CVector& state(int lam) const;
  const CMatrix& transform() const { return transform_; }

 private:
  friend TwoQubitBasis standard_bell();
  friend TwoQubitBasis generalized_bell(double a_prime, double b_prime);
  TwoQubitBasis(BasisKind kind, double a_prime, double b_prime);

  BasisKind kind_;
  double a_prime_;
  double b_prime_;
  CMatrix transform_;
  std::array<CVector, 4> states_;
};

// phi^{1,2} = (|00> +- |11>)/sqrt(2), phi^{3,4} = (|01> +- |10>)/sqrt(2).
TwoQubitBasis standard_bell();

// phi^1 = a'|00> + b'|11>, phi^2 = b'|00> - a'|11>,
// phi^3 = a'|01> + b'|10>, phi^4 = b'|01> - a'|10>.
// Throws InvalidBasis unless a'^2 + b'^2 = 1 within 1e-9.
TwoQubitBasis generalized_bell(double a_prime, double b_prime);

// sigma^lambda = X T^lambda, where T^lambda is the 2x2 block
// T^lambda(j, i) = sqrt(2) conj(phi^lambda_{ij}). With this scaling Bob's
// unnormalized branch after outcome lambda is (1/2) sigma^lambda (alpha, beta)^T.
struct BranchOperators {
  std::array<CMatrix, 4> sigma;

  const CMatrix& operator[](int lam) const { return sigma.at(lam - 1); }
};

CMatrix branch_block(const TwoQubitBasis& basis, int lam);
BranchOperators branch_operators(const ChannelParameterMatrix& x,
                                 const TwoQubitBasis& basis);

// Bob's branch predicted by the operator formalism: (1/2) sigma^lambda R.
CVector branch_state(const BranchOperators& ops, const PureInputState& input,
                     int lam);

struct Projection {
  double probability;
  CVector bob_state;  // unnormalized, squared norm == probability
};

// Projects particles (1, 2) of the 8-amplitude state |q1 q2 q3> onto
// phi^lambda and returns Bob's residual qubit.
Projection project(const CVector& total, const TwoQubitBasis& basis, int lam);

// |input>_1 (x) |channel>_23.
CVector total_state(const PureInputState& input, const TwoQubitChannel& ch);

// Inverse-CDF pick of an outcome 1..4 from one uniform draw u in [0, 1).
int sample_outcome(const std::array<double, 4>& probabilities, double u);

}  // namespace telematch
