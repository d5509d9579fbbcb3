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

#include "telematch/literals.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "telematch/errors.hpp"

namespace telematch {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void fail(std::string_view what, std::string_view text) {
  throw ParseError(std::string(what) + ": '" + std::string(text) + "'");
}

// Checks |norm_sq - 1| against the literal tolerance and returns the factor
// that rescales to unit norm.
double unit_scale(double norm_sq, std::string_view what, std::string_view text) {
  if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > kLiteralNormTolerance) {
    fail(std::string(what) + " is not normalized (squared norm " + std::to_string(norm_sq) +
             ")",
         text);
  }
  return 1.0 / std::sqrt(norm_sq);
}

}  // namespace

double parse_real(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() ||
      !std::isfinite(value)) {
    fail("invalid real number", text);
  }
  return value;
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail("invalid complex number", text);
  if (s.back() != 'i') return parse_real(s);

  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string_view re = split_at == std::string_view::npos ? "" : body.substr(0, split_at);
  std::string_view im = split_at == std::string_view::npos ? body : body.substr(split_at);
  double imag = 0.0;
  if (im.empty() || im == "+") {
    imag = 1.0;
  } else if (im == "-") {
    imag = -1.0;
  } else {
    try {
      imag = parse_real(im);
    } catch (const ParseError&) {
      fail("invalid complex number", text);
    }
  }
  double real = 0.0;
  if (!re.empty()) {
    try {
      real = parse_real(re);
    } catch (const ParseError&) {
      fail("invalid complex number", text);
    }
  }
  return {real, imag};
}

TwoQubitChannel parse_channel(std::string_view text) {
  const std::string_view s = trim(text);
  Complex x[4];
  if (s.starts_with("diag:")) {
    const auto parts = split(s.substr(5), ',');
    if (parts.size() != 2) fail("diag channel needs two coefficients", text);
    x[0] = parse_complex(parts[0]);
    x[3] = parse_complex(parts[1]);
  } else {
    const auto parts = split(s, ',');
    if (parts.size() != 4) fail("channel needs four coefficients x00,x01,x10,x11", text);
    for (std::size_t i = 0; i < 4; ++i) x[i] = parse_complex(parts[i]);
  }
  double n = 0.0;
  for (const auto& z : x) n += std::norm(z);
  const double f = unit_scale(n, "channel", text);
  return TwoQubitChannel(x[0] * f, x[1] * f, x[2] * f, x[3] * f);
}

TwoQubitBasis parse_basis(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "bell") return standard_bell();
  if (!s.starts_with("gbm:")) fail("basis must be 'bell' or 'gbm:a',b''", text);
  const auto parts = split(s.substr(4), ',');
  if (parts.size() != 2) fail("gbm basis needs two weights", text);
  const double ap = parse_real(parts[0]);
  const double bp = parse_real(parts[1]);
  const double f = unit_scale(ap * ap + bp * bp, "basis", text);
  return generalized_bell(ap * f, bp * f);
}

KPolicy parse_k_policy(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "max") return MaxGlobal{};
  if (s == "per-outcome") return MaxPerOutcome{};
  const double k = parse_real(s);
  if (!(k > 0.0)) fail("K must be positive", text);
  return FixedK{k};
}

PureInputState parse_input_state(std::string_view alpha, std::string_view beta) {
  const Complex a = parse_complex(alpha);
  const Complex b = parse_complex(beta);
  const double f = unit_scale(std::norm(a) + std::norm(b), "input state",
                              std::string(alpha) + "," + std::string(beta));
  return PureInputState(a * f, b * f);
}

}  // namespace telematch
