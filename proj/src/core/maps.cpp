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

#include "core/maps.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "core/retraction.hpp"

namespace symprod {

MapUnderTest identity_map(std::size_t capacity, std::size_t dim) {
  MapUnderTest map;
  map.id = "identity";
  map.dim = dim;
  map.capacity = capacity;
  map.image_distance = [](const PointSet& a, const PointSet& b) {
    return hausdorff_distance(a, b);
  };
  map.certified_upper = 1.0;
  map.certified_lower = 1.0;
  return map;
}

MapUnderTest scaling_map(double factor, std::size_t capacity) {
  MapUnderTest map;
  map.id = "scale";
  map.capacity = capacity;
  map.image_distance = [factor](const PointSet& a, const PointSet& b) {
    return hausdorff_distance(a.scaled(factor), b.scaled(factor));
  };
  map.certified_upper = std::abs(factor);
  map.certified_lower = std::abs(factor);
  return map;
}

MapUnderTest embedding_map(std::shared_ptr<const EmbeddingPipeline> pipeline) {
  MapUnderTest map;
  map.id = "embed";
  map.capacity = static_cast<std::size_t>(pipeline->capacity());
  const CertifiedBounds bounds = certified_bounds(*pipeline);
  map.certified_upper = bounds.upper;
  map.certified_lower = bounds.lower;
  map.image_distance = [pipeline](const PointSet& a, const PointSet& b) {
    return euclidean_distance(pipeline->embed(a), pipeline->embed(b));
  };
  return map;
}

MapUnderTest retraction_map(std::size_t capacity) {
  MapUnderTest map;
  map.id = "retract";
  map.capacity = capacity;
  map.certified_upper = retraction_lipschitz_bound(capacity);
  map.image_distance = [capacity](const PointSet& a, const PointSet& b) {
    return hausdorff_distance(retract_once(a, capacity), retract_once(b, capacity));
  };
  return map;
}

MapUnderTest tomography_map(const SeparationCertificate& certificate, bool max_component) {
  MapUnderTest map;
  map.id = max_component ? "tomo-max" : "tomo";
  map.dim = certificate.family.dim;
  map.capacity = certificate.family.capacity;
  const LineFamily family = certificate.family;
  const double copies = static_cast<double>(family.directions.size());
  map.certified_upper = max_component ? 1.0 : std::sqrt(copies);
  map.certified_lower = 1.0 / certificate.separation;
  map.image_distance = [family, max_component](const PointSet& a, const PointSet& b) {
    const auto ga = project_family(a, family);
    const auto gb = project_family(b, family);
    return max_component ? family_max_distance(ga, gb) : family_distance(ga, gb);
  };
  return map;
}

MapUnderTest circle_map_under_test(std::size_t capacity) {
  MapUnderTest map;
  map.id = "circle";
  map.capacity = capacity;
  map.domain = SampleDomain::kPinned;
  map.certified_upper = 2.0 * std::numbers::pi;
  map.certified_lower = 4.0;
  map.image_distance = [](const PointSet& a, const PointSet& b) {
    return hausdorff_distance(circle_map(a), circle_map(b));
  };
  return map;
}

MapUnderTest make_named_map(std::string_view name, int n, int d) {
  if (n < 1) fail(ErrorCode::kBadRange, "n must be >= 1");
  const auto capacity = static_cast<std::size_t>(n);
  if (name == "embed") {
    return embedding_map(std::make_shared<const EmbeddingPipeline>(EmbeddingPipeline::build(n)));
  }
  if (name == "retract") return retraction_map(capacity);
  if (name == "tomo") {
    if (d < 2) fail(ErrorCode::kBadRange, "tomo needs d >= 2");
    return tomography_map(
        separation_constant(make_line_family(capacity, static_cast<std::size_t>(d))), true);
  }
  if (name == "circle") {
    if (n < 2) fail(ErrorCode::kBadRange, "circle map needs n >= 2");
    return circle_map_under_test(capacity);
  }
  fail(ErrorCode::kBadRange, "unknown map '" + std::string(name) + "'");
}

}  // namespace symprod
