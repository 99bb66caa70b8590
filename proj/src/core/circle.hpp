// Copyright 2026 The symprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMPROD_CORE_CIRCLE_HPP_
#define SYMPROD_CORE_CIRCLE_HPP_

#include <array>
#include <cmath>
#include <numbers>

namespace symprod {

// exp(2 pi i * turns) as (cos, sin). Quarter turns are reduced exactly, so
// multiples of 1/4 land on exact axis points and 0 and 1 coincide.
inline std::array<double, 2> turn_point(double turns) {
  double scaled = 4.0 * (turns - std::floor(turns));
  double quarter = std::floor(scaled);
  const double frac = scaled - quarter;
  const double angle = frac * (std::numbers::pi / 2.0);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::array<double, 2> p;
  switch (static_cast<int>(quarter) & 3) {
    case 0: p = {c, s}; break;
    case 1: p = {-s, c}; break;
    case 2: p = {-c, -s}; break;
    default: p = {s, -c}; break;
  }
  for (double& v : p) {
    if (v == 0.0) v = 0.0;
  }
  return p;
}

}  // namespace symprod

#endif  // SYMPROD_CORE_CIRCLE_HPP_
