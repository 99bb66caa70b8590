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

#ifndef SYMPROD_CORE_DISTORTION_HPP_
#define SYMPROD_CORE_DISTORTION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/point_set.hpp"
#include "core/sampler.hpp"

namespace symprod {

class EmbeddingPipeline;

// Ratios are only formed for pairs whose domain distance exceeds this.
inline constexpr double kMinDomainDistance = 1e-12;

// A map on a space of finite sets, seen through the distance it induces on
// images. Implementations must be pure so that sampling streams can share it.
struct MapUnderTest {
  std::string id;
  std::size_t dim = 1;
  std::size_t capacity = 1;
  SampleDomain domain = SampleDomain::kFree;
  std::function<double(const PointSet&, const PointSet&)> image_distance;
  std::optional<double> certified_upper;
  std::optional<double> certified_lower;
};

struct Witness {
  PointSet a;
  PointSet b;
  double domain_distance;
  double image_distance;
  double ratio;
};

struct PairRecord {
  double domain_distance;
  double image_distance;
};

struct DistortionReport {
  std::string map_id;
  std::size_t samples = 0;
  double lower_ratio = 0.0;
  double upper_ratio = 0.0;
  std::optional<Witness> witness_low;
  std::optional<Witness> witness_high;
  std::optional<double> certified_upper;
  std::optional<double> certified_lower;
  std::uint64_t seed = 0;
  std::size_t search_iterations = 0;
  // Filled only when requested through SearchOptions::record_history.
  std::vector<double> lower_history;
  std::vector<double> upper_history;

  // No observed ratio leaves the certified interval.
  bool within_certified() const;
};

// Sampler matching the map's domain (box [-10,10]^d for free sets).
MetricSampler domain_sampler(const MapUnderTest& map, std::uint64_t seed);

struct SamplingOptions {
  // Fixed number of independent streams; results do not depend on hardware.
  std::size_t streams = 4;
  std::vector<PairRecord>* pairs = nullptr;
};

DistortionReport estimate_distortion(const MapUnderTest& map,
                                     const MetricSampler& sampler,
                                     std::size_t count,
                                     const SamplingOptions& options = {});

struct SearchOptions {
  std::size_t iterations = 0;
  double step = 0.1;
  bool record_history = false;
};

// Annealed local search from the report's witnesses: lowers the minimum and
// raises the maximum ratio, never the other way.
DistortionReport adversarial_search(const MapUnderTest& map,
                                    const DistortionReport& start,
                                    const SearchOptions& options);

struct CertifiedBounds {
  std::optional<double> lower;
  double upper;
};

// Composition of the pipeline's per-stage constants; lower is empty when any
// stage's lower constant is only empirical.
CertifiedBounds certified_bounds(const EmbeddingPipeline& pipeline);

}  // namespace symprod

#endif  // SYMPROD_CORE_DISTORTION_HPP_
