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

#include <string>

#include "telematch/qlinalg.hpp"

namespace telematch {

inline constexpr int kSignificantDigits = 15;

// Shortest of fixed/scientific with 15 significant digits, '.' as the
// decimal point whatever the locale. Negative zero prints as "0".
std::string format_real(double x);

// Same syntax as the complex literal parser: "re" when the imaginary part is
// zero, otherwise "re+imi" / "re-imi".
std::string format_complex(Complex z);

}  // namespace telematch
