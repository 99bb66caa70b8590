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

#ifndef SYMPROD_CORE_MAPS_HPP_
#define SYMPROD_CORE_MAPS_HPP_

#include <memory>
#include <string_view>

#include "core/distortion.hpp"
#include "core/embedding.hpp"
#include "core/tomography.hpp"

namespace symprod {

// Toolkit maps packaged for the distortion lab, each carrying the constants
// it is known to satisfy.

MapUnderTest identity_map(std::size_t capacity, std::size_t dim = 1);
MapUnderTest scaling_map(double factor, std::size_t capacity);
MapUnderTest embedding_map(std::shared_ptr<const EmbeddingPipeline> pipeline);
// retract_once at capacity n; upper bound 6n+1.
MapUnderTest retraction_map(std::size_t capacity);
// Projection family with the Euclidean product metric on tuples, or with the
// max-component metric (certified in [1/M, 1]).
MapUnderTest tomography_map(const SeparationCertificate& certificate, bool max_component);
// Pinned sets to their circle images; certified in [4, 2 pi].
MapUnderTest circle_map_under_test(std::size_t capacity);

// "embed", "retract", "tomo" or "circle"; d is used by "tomo" only.
MapUnderTest make_named_map(std::string_view name, int n, int d);

}  // namespace symprod

#endif  // SYMPROD_CORE_MAPS_HPP_
