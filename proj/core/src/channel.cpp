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

#include "telematch/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "telematch/errors.hpp"

namespace telematch {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

PureInputState::PureInputState(Complex alpha, Complex beta, double tol)
    : alpha_(alpha), beta_(beta) {
  if (!finite(alpha) || !finite(beta)) {
    throw InvalidValue("input state: non-finite amplitude");
  }
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > tol) {
    throw InvalidValue("input state: |alpha|^2 + |beta|^2 = " + std::to_string(n) +
                       ", expected 1");
  }
}

PureInputState PureInputState::normalized(Complex alpha, Complex beta) {
  const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidValue("input state: cannot normalize zero or non-finite amplitudes");
  }
  return PureInputState(alpha / n, beta / n);
}

TwoQubitChannel::TwoQubitChannel(Complex x00, Complex x01, Complex x10,
                                 Complex x11, double tol)
    : x_{x00, x01, x10, x11} {
  double n = 0.0;
  for (const auto& z : x_) {
    if (!finite(z)) throw InvalidValue("channel: non-finite coefficient");
    n += std::norm(z);
  }
  if (std::abs(n - 1.0) > tol) {
    throw InvalidValue("channel: sum of |x_jk|^2 = " + std::to_string(n) +
                       ", expected 1");
  }
}

TwoQubitChannel TwoQubitChannel::diagonal(Complex a, Complex b, double tol) {
  return TwoQubitChannel(a, 0.0, 0.0, b, tol);
}

TwoQubitChannel TwoQubitChannel::normalized(Complex x00, Complex x01,
                                            Complex x10, Complex x11) {
  const double n =
      std::sqrt(std::norm(x00) + std::norm(x01) + std::norm(x10) + std::norm(x11));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidValue("channel: cannot normalize zero or non-finite coefficients");
  }
  return TwoQubitChannel(x00 / n, x01 / n, x10 / n, x11 / n);
}

TwoQubitChannel TwoQubitChannel::bell() {
  const double h = std::numbers::sqrt2 / 2.0;
  return diagonal(h, h);
}

bool TwoQubitChannel::is_diagonal(double tol) const {
  return std::abs(x_[1]) <= tol && std::abs(x_[2]) <= tol;
}

std::string_view to_string(ChannelClass c) {
  switch (c) {
    case ChannelClass::Perfect:
      return "Perfect";
    case ChannelClass::Probabilistic:
      return "Probabilistic";
    case ChannelClass::Unteleportable:
      return "Unteleportable";
  }
  return "?";
}

ChannelParameterMatrix cpm(const TwoQubitChannel& ch) {
  const double s = std::numbers::sqrt2;
  return {CMatrix(2, 2, {s * ch.x00(), s * ch.x10(), s * ch.x01(), s * ch.x11()})};
}

ChannelClass classify(const TwoQubitChannel& ch, double tol) {
  const CMatrix x = cpm(ch).matrix;
  if (is_unitary(x, tol)) return ChannelClass::Perfect;
  if (std::abs(determinant2(x)) > tol) return ChannelClass::Probabilistic;
  return ChannelClass::Unteleportable;
}

double concurrence(const TwoQubitChannel& ch) {
  return 2.0 * std::abs(ch.x00() * ch.x11() - ch.x01() * ch.x10());
}

}  // namespace telematch
