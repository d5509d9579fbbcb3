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

#include "telematch/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "telematch/errors.hpp"

namespace telematch {
namespace {

void check_lambda(int lam) {
  if (lam < 1 || lam > 4) {
    throw InvalidValue("outcome index must be in 1..4, got " + std::to_string(lam));
  }
}

CMatrix generalized_transform(double ap, double bp) {
  return CMatrix(4, 4, {ap, 0.0, 0.0, bp,    //
                        bp, 0.0, 0.0, -ap,   //
                        0.0, ap, bp, 0.0,    //
                        0.0, bp, -ap, 0.0});
}

CVector row(const CMatrix& m, std::size_t r) {
  return CVector{m(r, 0), m(r, 1), m(r, 2), m(r, 3)};
}

}  // namespace

TwoQubitBasis::TwoQubitBasis(BasisKind kind, double a_prime, double b_prime)
    : kind_(kind),
      a_prime_(a_prime),
      b_prime_(b_prime),
      transform_(kind == BasisKind::StandardBell
                     ? CMatrix(4, 4,
                               {1.0, 0.0, 0.0, 1.0,    //
                                1.0, 0.0, 0.0, -1.0,   //
                                0.0, 1.0, 1.0, 0.0,    //
                                0.0, 1.0, -1.0, 0.0})
                           .scaled(std::numbers::sqrt2 / 2.0)
                     : generalized_transform(a_prime, b_prime)),
      states_{row(transform_, 0), row(transform_, 1), row(transform_, 2),
              row(transform_, 3)} {}

const CVector& TwoQubitBasis::state(int lam) const {
  check_lambda(lam);
  return states_[static_cast<std::size_t>(lam - 1)];
}

TwoQubitBasis standard_bell() {
  const double h = std::numbers::sqrt2 / 2.0;
  return TwoQubitBasis(BasisKind::StandardBell, h, h);
}

TwoQubitBasis generalized_bell(double a_prime, double b_prime) {
  if (!std::isfinite(a_prime) || !std::isfinite(b_prime)) {
    throw InvalidBasis("generalized Bell basis: non-finite weight");
  }
  const double n = a_prime * a_prime + b_prime * b_prime;
  if (std::abs(n - 1.0) > kDefaultTolerance) {
    throw InvalidBasis("generalized Bell basis: a'^2 + b'^2 = " + std::to_string(n) +
                       ", expected 1");
  }
  return TwoQubitBasis(BasisKind::GeneralizedBell, a_prime, b_prime);
}

CMatrix branch_block(const TwoQubitBasis& basis, int lam) {
  const CVector& phi = basis.state(lam);
  const double s = std::numbers::sqrt2;
  // (j, i) entry from phi_{ij} at index 2i + j.
  return CMatrix(2, 2, {s * std::conj(phi[0]), s * std::conj(phi[2]),
                        s * std::conj(phi[1]), s * std::conj(phi[3])});
}

BranchOperators branch_operators(const ChannelParameterMatrix& x,
                                 const TwoQubitBasis& basis) {
  return {{multiply(x.matrix, branch_block(basis, 1)),
           multiply(x.matrix, branch_block(basis, 2)),
           multiply(x.matrix, branch_block(basis, 3)),
           multiply(x.matrix, branch_block(basis, 4))}};
}

CVector branch_state(const BranchOperators& ops, const PureInputState& input,
                     int lam) {
  check_lambda(lam);
  return apply(ops[lam], input.vector()).scaled(0.5);
}

CVector total_state(const PureInputState& input, const TwoQubitChannel& ch) {
  return tensor(input.vector(), ch.vector());
}

Projection project(const CVector& total, const TwoQubitBasis& basis, int lam) {
  if (total.dim() != 8) {
    throw DimensionMismatch("project: expected a three-qubit state");
  }
  const CVector& phi = basis.state(lam);
  Complex bob[2] = {0.0, 0.0};
  for (std::size_t ij = 0; ij < 4; ++ij) {
    const Complex w = std::conj(phi[ij]);
    bob[0] += w * total[2 * ij];
    bob[1] += w * total[2 * ij + 1];
  }
  CVector state{bob[0], bob[1]};
  const double p = state.norm_sq();
  return {p, std::move(state)};
}

int sample_outcome(const std::array<double, 4>& probabilities, double u) {
  double cumulative = 0.0;
  for (int lam = 1; lam <= 3; ++lam) {
    cumulative += probabilities[static_cast<std::size_t>(lam - 1)];
    if (u < cumulative) return lam;
  }
  // Rounding in the cumulative sum must not select an impossible outcome.
  for (int lam = 4; lam >= 1; --lam) {
    if (probabilities[static_cast<std::size_t>(lam - 1)] > 0.0) return lam;
  }
  return 4;
}

}  // namespace telematch
