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

#include <string_view>

#include "telematch/qlinalg.hpp"

namespace telematch {

// The unknown qubit alpha|0> + beta|1>.
class PureInputState {
 public:
  // Throws InvalidValue unless |alpha|^2 + |beta|^2 = 1 within tol.
  PureInputState(Complex alpha, Complex beta, double tol = kDefaultTolerance);

  // Rescales (alpha, beta) to unit norm; throws for the zero vector.
  static PureInputState normalized(Complex alpha, Complex beta);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  // Amplitude of |i>, i in {0, 1}.
  Complex amplitude(int i) const { return i == 0 ? alpha_ : beta_; }
  CVector vector() const { return CVector{alpha_, beta_}; }

 private:
  Complex alpha_;
  Complex beta_;
};

// Normalized two-qubit channel state x00|00> + x01|01> + x10|10> + x11|11>.
// The channel parameter matrix carries the conventional sqrt(2) scaling.
class TwoQubitChannel {
 public:
  TwoQubitChannel(Complex x00, Complex x01, Complex x10, Complex x11,
                  double tol = kDefaultTolerance);

  // a|00> + b|11>.
  static TwoQubitChannel diagonal(Complex a, Complex b,
                                  double tol = kDefaultTolerance);
  // Rescales the coefficients to unit norm; throws for the zero state.
  static TwoQubitChannel normalized(Complex x00, Complex x01, Complex x10,
                                    Complex x11);
  // (|00> + |11>)/sqrt(2).
  static TwoQubitChannel bell();

  Complex x00() const { return x_[0]; }
  Complex x01() const { return x_[1]; }
  Complex x10() const { return x_[2]; }
  Complex x11() const { return x_[3]; }
  // Coefficient of |jk>.
  Complex coefficient(int j, int k) const { return x_[2 * j + k]; }
  CVector vector() const { return CVector{x_[0], x_[1], x_[2], x_[3]}; }

  // True when the off-diagonal coefficients vanish (|x01|, |x10| <= tol).
  bool is_diagonal(double tol = 1e-12) const;

 private:
  Complex x_[4];
};

// X = sqrt(2) [[x00, x10], [x01, x11]]: row k, column j holds X^{jk}.
struct ChannelParameterMatrix {
  CMatrix matrix;
};

enum class ChannelClass { Perfect, Probabilistic, Unteleportable };

std::string_view to_string(ChannelClass c);

ChannelParameterMatrix cpm(const TwoQubitChannel& ch);

// Perfect if the CPM is unitary, else Probabilistic if |det X| > tol,
// else Unteleportable. Unitarity is checked first.
ChannelClass classify(const TwoQubitChannel& ch, double tol = kDefaultTolerance);

// 2 |x00 x11 - x01 x10|, in [0, 1].
double concurrence(const TwoQubitChannel& ch);

}  // namespace telematch
