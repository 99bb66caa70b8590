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

#ifndef SYMPROD_CORE_RETRACTION_HPP_
#define SYMPROD_CORE_RETRACTION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "core/point_set.hpp"

namespace symprod {

struct GapProfile {
  double delta = 0.0;
  // Smallest index j (0-based, j >= 1) with a[j] - a[j-1] == delta; empty when
  // the set has fewer than n elements.
  std::optional<std::size_t> argmin_index;
};

// Minimal consecutive gap of a full set (|A| == n); 0 for smaller sets.
GapProfile min_gap(const PointSet& set, std::size_t capacity);

// The moved values a'_1 <= ... <= a'_n before canonicalization. For |A| < n
// these are the elements of A unchanged.
std::vector<double> retraction_values(const PointSet& set, std::size_t capacity);

// Lipschitz retraction R^(n) -> R^(n-1): each a_j is pulled toward 0 by
// (n-j) delta (if a_j <= 0) or j delta (if a_j > 0), clamped at 0.
PointSet retract_once(const PointSet& set, std::size_t capacity);

// Composition of retract_once for capacities n, n-1, ..., k+1.
PointSet retract_to(const PointSet& set, std::size_t capacity, std::size_t target);

// Lipschitz bound 6n+1 for retract_once at capacity n.
inline double retraction_lipschitz_bound(std::size_t capacity) {
  return 6.0 * static_cast<double>(capacity) + 1.0;
}

}  // namespace symprod

#endif  // SYMPROD_CORE_RETRACTION_HPP_
