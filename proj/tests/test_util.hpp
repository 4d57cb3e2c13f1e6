// Copyright 2026 The fracmom Authors
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

#include <doctest.h>

#include <string>

#include "fracmom/real.hpp"
#include "fracmom/symbolic.hpp"

namespace fracmom::testing {

// |x - expected| <= 10^-digits, with the expected value given as a decimal.
inline bool near(const Real& x, const std::string& expected, int digits) {
  const auto bits = std::max<mpfr_prec_t>(x.bits(), 200);
  const Real e = Real::parse(expected, bits);
  return abs(with_bits(x, bits) - e) < Real::pow10(-digits, bits);
}

inline Real eval30(const SymValue& v) { return eval_sym(v, Precision(30)); }

}  // namespace fracmom::testing
