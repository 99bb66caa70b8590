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

#include "core/retraction.hpp"

#include <algorithm>
#include <string>

namespace symprod {

namespace {

void require_line_set(const PointSet& set, std::size_t capacity) {
  if (set.dim() != 1) fail(ErrorCode::kDimensionMismatch, "retraction acts on subsets of R");
  if (capacity == 0) fail(ErrorCode::kBadRange, "capacity must be positive");
  if (set.size() > capacity) {
    fail(ErrorCode::kCapacityExceeded,
         "set of cardinality " + std::to_string(set.size()) + " exceeds capacity " +
             std::to_string(capacity));
  }
}

}  // namespace

GapProfile min_gap(const PointSet& set, std::size_t capacity) {
  require_line_set(set, capacity);
  GapProfile profile;
  if (set.size() < capacity || set.size() < 2) return profile;
  profile.delta = set.value(1) - set.value(0);
  profile.argmin_index = 1;
  for (std::size_t j = 2; j < set.size(); ++j) {
    const double gap = set.value(j) - set.value(j - 1);
    if (gap < profile.delta) {
      profile.delta = gap;
      profile.argmin_index = j;
    }
  }
  return profile;
}

std::vector<double> retraction_values(const PointSet& set, std::size_t capacity) {
  const GapProfile gap = min_gap(set, capacity);
  std::vector<double> out(set.coords().begin(), set.coords().end());
  if (set.size() < capacity) return out;
  const double n = static_cast<double>(capacity);
  const std::vector<double> a = out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double j = static_cast<double>(i + 1);
    out[i] = a[i] <= 0.0 ? std::min(0.0, a[i] + (n - j) * gap.delta)
                         : std::max(0.0, a[i] - j * gap.delta);
  }
  // The two values at the minimal gap agree exactly in real arithmetic; make
  // them agree in floating point too, copying within the common branch so
  // each value stays between 0 and its original.
  const std::size_t k = *gap.argmin_index;
  if (a[k - 1] > 0.0) {
    out[k] = out[k - 1];
  } else if (a[k] <= 0.0) {
    out[k - 1] = out[k];
  } else {
    out[k - 1] = 0.0;
    out[k] = 0.0;
  }
  // Rounding can also invert neighbours that are equal in exact arithmetic.
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = std::max(out[i], out[i - 1]);
  return out;
}

PointSet retract_once(const PointSet& set, std::size_t capacity) {
  if (set.size() < capacity) {
    require_line_set(set, capacity);
    return set;
  }
  return PointSet::on_line(retraction_values(set, capacity));
}

PointSet retract_to(const PointSet& set, std::size_t capacity, std::size_t target) {
  if (target < 1 || target >= capacity) {
    fail(ErrorCode::kBadRange, "retract_to needs 1 <= k < n, got k=" +
                                   std::to_string(target) + " n=" + std::to_string(capacity));
  }
  require_line_set(set, capacity);
  PointSet current = set;
  for (std::size_t level = capacity; level > target; --level) {
    current = retract_once(current, level);
  }
  return current;
}

}  // namespace symprod
