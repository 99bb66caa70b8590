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

#ifndef SYMPROD_CORE_JSON_IO_HPP_
#define SYMPROD_CORE_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "core/cone.hpp"
#include "core/distortion.hpp"
#include "core/embedding.hpp"
#include "core/extension.hpp"
#include "core/point_set.hpp"
#include "core/tomography.hpp"

namespace symprod {

using Json = nlohmann::json;

// Throws ParseError.
Json parse_json(std::string_view text);
// Two-space indented, trailing newline.
std::string dump_json(const Json& value);

// {"dim": d, "points": [[...], ...]}
Json to_json(const PointSet& set);
PointSet point_set_from_json(const Json& doc);
// A single document or an array of documents.
std::vector<PointSet> point_sets_from_json(const Json& doc);

Json to_json(const ConeComparisonReport& report);
Json to_json(const LineFamily& family);
Json to_json(const SeparationCertificate& certificate);
SeparationCertificate certificate_from_json(const Json& doc);
Json to_json(const SeparationReport& report);
Json to_json(const DistortionReport& report);
Json describe(const EmbeddingPipeline& pipeline);

// {"domain": [...], "images": [point-set...], "L": ..., "D": ...}
Json to_json(const SampledMap& map);
SampledMap sampled_map_from_json(const Json& doc);
// Grid statistics; the full ball map is included when with_map is set.
Json to_json(const ExtensionResult& result, bool with_map);

}  // namespace symprod

#endif  // SYMPROD_CORE_JSON_IO_HPP_
