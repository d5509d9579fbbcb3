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

#include "telematch/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
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

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double k_bound(Complex c0, Complex c1) {
  const double m = std::max(std::abs(c0), std::abs(c1));
  return m == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / m;
}

MatchCoefficient::MatchCoefficient(double k, Complex c0, Complex c1) : k_(k) {
  const double bound = k_bound(c0, c1);
  if (!std::isfinite(k) || !(k > 0.0) || k > bound * (1.0 + kKRelativeSlack)) {
    throw KOutOfRange("K = " + std::to_string(k) + " outside (0, " +
                      std::to_string(bound) + "]");
  }
}

void validate_protocol_inputs(const TwoQubitChannel& ch, const TwoQubitBasis& basis) {
  if (!ch.is_diagonal()) {
    throw UnsupportedChannel("matching protocol needs a channel of the form a|00> + b|11>");
  }
  if (classify(ch) == ChannelClass::Unteleportable) {
    throw UnteleportableChannel("channel parameter matrix is singular");
  }
  if (basis.a_prime() == 0.0 || basis.b_prime() == 0.0) {
    throw InvalidBasis("measurement basis is not entangled (a' or b' is zero)");
  }
}

BranchCoefficients branch_coefficients(const TwoQubitChannel& ch,
                                       const TwoQubitBasis& basis, int lam) {
  check_lambda(lam);
  const Complex a = ch.x00();
  const Complex b = ch.x11();
  const bool swapped = lam >= 3;
  if (basis.kind() == BasisKind::StandardBell) {
    return {a, b, std::numbers::sqrt2 / 2.0, swapped};
  }
  const double ap = basis.a_prime();
  const double bp = basis.b_prime();
  // phi^1, phi^4 pair a with a'; phi^2, phi^3 pair a with b'.
  if (lam == 1 || lam == 4) return {a * ap, b * bp, 1.0, swapped};
  return {a * bp, b * ap, 1.0, swapped};
}

CMatrix matched_unitary(Complex c0, Complex c1, double k) {
  const double kk = MatchCoefficient(k, c0, c1).value();
  const auto off = [kk](Complex c) {
    const double t = kk * std::abs(c);
    return std::sqrt(std::max(0.0, 1.0 - t * t));
  };
  const double s0 = off(c0);
  const double s1 = off(c1);
  return CMatrix(4, 4, {kk * c1, 0.0, s1, 0.0,                //
                        0.0, kk * c0, 0.0, s0,                //
                        s1, 0.0, -kk * std::conj(c1), 0.0,    //
                        0.0, s0, 0.0, -kk * std::conj(c0)});
}

CVector attach_ancilla(const CVector& bob) {
  if (bob.dim() != 2) throw DimensionMismatch("attach_ancilla: expected one qubit");
  return tensor(CVector{1.0, 0.0}, bob);
}

AncillaOutcome evolve_and_measure(const CVector& state4, const CMatrix& u) {
  if (state4.dim() != 4) {
    throw DimensionMismatch("evolve_and_measure: expected a two-qubit state");
  }
  const double n = state4.norm_sq();
  if (n == 0.0) throw InvalidValue("evolve_and_measure: zero-norm branch");
  const CVector out = apply(u, state4);
  const CVector ok{out[0], out[1]};
  const CVector fail{out[2], out[3]};
  const auto unit = [](const CVector& v) {
    return v.norm_sq() > 0.0 ? v.normalized() : v;
  };
  return {ok.norm_sq() / n, unit(ok), unit(fail)};
}

CMatrix pauli_correction(int lam) {
  check_lambda(lam);
  switch (lam) {
    case 1:
      return CMatrix::identity(2);
    case 2:
      return pauli_z();
    case 3:
      return pauli_x();
    default:
      return multiply(pauli_z(), pauli_x());
  }
}

double max_abs_diff(const ProtocolReport& a, const ProtocolReport& b) {
  double d = std::abs(a.total - b.total);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& x = a.outcomes[i];
    const auto& y = b.outcomes[i];
    d = std::max({d, std::abs(x.k_used - y.k_used), std::abs(x.p_alice - y.p_alice),
                  std::abs(x.p_bob - y.p_bob), std::abs(x.p_joint - y.p_joint),
                  std::abs(x.fidelity - y.fidelity)});
  }
  return d;
}

std::array<double, 4> resolve_k(const TwoQubitChannel& ch, const TwoQubitBasis& basis,
                                const KPolicy& policy) {
  validate_protocol_inputs(ch, basis);
  std::array<double, 4> bounds{};
  for (int lam = 1; lam <= 4; ++lam) {
    const auto bc = branch_coefficients(ch, basis, lam);
    bounds[static_cast<std::size_t>(lam - 1)] = k_bound(bc.c0, bc.c1);
  }
  return std::visit(
      overloaded{
          [&](const FixedK& f) {
            for (int lam = 1; lam <= 4; ++lam) {
              const auto bc = branch_coefficients(ch, basis, lam);
              MatchCoefficient(f.k, bc.c0, bc.c1);
            }
            return std::array<double, 4>{f.k, f.k, f.k, f.k};
          },
          [&](const MaxGlobal&) {
            const double k = *std::min_element(bounds.begin(), bounds.end());
            return std::array<double, 4>{k, k, k, k};
          },
          [&](const MaxPerOutcome&) { return bounds; },
      },
      policy);
}

double optimal_k(const TwoQubitChannel& ch, const TwoQubitBasis& basis, int lam) {
  validate_protocol_inputs(ch, basis);
  const auto bc = branch_coefficients(ch, basis, lam);
  return k_bound(bc.c0, bc.c1);
}

ProtocolReport analytic_report(const PureInputState& input, const TwoQubitChannel& ch,
                               const TwoQubitBasis& basis, const KPolicy& policy) {
  const auto ks = resolve_k(ch, basis, policy);
  ProtocolReport report;
  for (int lam = 1; lam <= 4; ++lam) {
    const auto i = static_cast<std::size_t>(lam - 1);
    const auto bc = branch_coefficients(ch, basis, lam);
    const Complex first = bc.swapped ? input.beta() : input.alpha();
    const Complex second = bc.swapped ? input.alpha() : input.beta();
    const double s2 = bc.scale * bc.scale;
    const double k = ks[i];

    OutcomeReport& o = report.outcomes[i];
    o.lam = lam;
    o.k_used = k;
    o.p_alice = s2 * (std::norm(bc.c0) * std::norm(first) +
                      std::norm(bc.c1) * std::norm(second));
    o.p_joint = s2 * k * k * std::norm(bc.c0) * std::norm(bc.c1);
    o.p_bob = o.p_alice > 0.0 ? o.p_joint / o.p_alice : 0.0;
    o.fidelity = o.p_joint > 0.0 ? 1.0 : 0.0;
    report.total += o.p_joint;
  }
  return report;
}

ProtocolReport simulate_report(const PureInputState& input, const TwoQubitChannel& ch,
                               const TwoQubitBasis& basis, const KPolicy& policy) {
  const auto ks = resolve_k(ch, basis, policy);
  const CVector total = total_state(input, ch);
  const CVector original = input.vector();
  ProtocolReport report;
  for (int lam = 1; lam <= 4; ++lam) {
    const auto i = static_cast<std::size_t>(lam - 1);
    const auto bc = branch_coefficients(ch, basis, lam);
    OutcomeReport& o = report.outcomes[i];
    o.lam = lam;
    o.k_used = ks[i];

    const Projection proj = project(total, basis, lam);
    o.p_alice = proj.probability;
    if (proj.probability == 0.0) continue;

    const CMatrix u = matched_unitary(bc.c0, bc.c1, ks[i]);
    const AncillaOutcome anc = evolve_and_measure(attach_ancilla(proj.bob_state), u);
    o.p_bob = anc.p_success;
    o.p_joint = o.p_alice * o.p_bob;
    if (anc.p_success > 0.0) {
      const CVector corrected = apply(pauli_correction(lam), anc.success_state);
      o.fidelity = std::norm(inner(original, corrected));
    }
    report.total += o.p_joint;
  }
  return report;
}

Fig1Row fig1_row(double b) {
  if (!(b > 0.0) || b > 1.0) throw InvalidValue("fig1: b must lie in (0, 1]");
  const double a2 = 1.0 - b * b;
  const double b2 = b * b;
  return {b, 2.0 * b2, 2.0 * a2 * b2, 4.0 * a2 * b2};
}

std::vector<Fig1Row> fig1_data(int steps) {
  if (steps < 2) throw InvalidValue("fig1: steps must be at least 2");
  const double hi = std::numbers::sqrt2 / 2.0;
  const double lo = kFig1LowerB;
  std::vector<Fig1Row> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double b = i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1);
    rows.push_back(fig1_row(b));
  }
  return rows;
}

}  // namespace telematch
