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

#include "core/json_io.hpp"

#include <cmath>

namespace symprod {

namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::kSchemaError, what); }

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json stage_json(const Stage& stage) {
  return Json{{"kind", std::string(stage_name(stage.kind))},
              {"lower", stage.constants.lower},
              {"upper", stage.constants.upper},
              {"lower_certified", stage.constants.lower_certified},
              {"upper_certified", stage.constants.upper_certified}};
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json{{"a", to_json(w->a)},
              {"b", to_json(w->b)},
              {"domain_distance", w->domain_distance},
              {"image_distance", w->image_distance},
              {"ratio", w->ratio}};
}

Vec number_array(const Json& doc, const std::string& what) {
  if (!doc.is_array()) schema(what + " must be an array of numbers");
  Vec out;
  out.reserve(doc.size());
  for (const Json& v : doc) {
    if (!v.is_number()) schema(what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

// Field readers; nlohmann type errors are turned into SchemaError by callers.
SeparationCertificate certificate_fields(const Json& doc);
SampledMap sampled_map_fields(const Json& doc);

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kParseError, e.what());
  }
}

std::string dump_json(const Json& value) { return value.dump(2) + "\n"; }

Json to_json(const PointSet& set) {
  Json points = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto p = set.point(i);
    points.push_back(Vec(p.begin(), p.end()));
  }
  return Json{{"dim", set.dim()}, {"points", std::move(points)}};
}

PointSet point_set_from_json(const Json& doc) {
  if (!doc.is_object()) schema("point set must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    schema("point set needs a positive integer \"dim\"");
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    schema("point set needs a \"points\" array");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<Vec> raw;
  for (const Json& p : doc["points"]) raw.push_back(number_array(p, "point"));
  return PointSet::canonicalize(raw, dim);
}

std::vector<PointSet> point_sets_from_json(const Json& doc) {
  std::vector<PointSet> out;
  if (doc.is_array()) {
    for (const Json& d : doc) out.push_back(point_set_from_json(d));
  } else {
    out.push_back(point_set_from_json(doc));
  }
  return out;
}

Json to_json(const ConeComparisonReport& r) {
  return Json{{"max_ratio", r.max_ratio},     {"min_ratio", r.min_ratio},
              {"pairs_tested", r.pairs_tested}, {"bound_10_ok", r.bound_10_ok},
              {"bound_12_ok", r.bound_12_ok},   {"seed", r.seed}};
}

Json to_json(const LineFamily& f) {
  return Json{{"dim", f.dim}, {"capacity", f.capacity}, {"directions", f.directions}};
}

Json to_json(const SeparationCertificate& c) {
  return Json{{"dim", c.family.dim},
              {"capacity", c.family.capacity},
              {"directions", c.family.directions},
              {"M", c.separation},
              {"method", c.method == CertificateMethod::kAnalytic ? "analytic" : "grid-oracle"},
              {"oracle_value", c.oracle_value},
              {"closed_form", c.closed_form}};
}

SeparationCertificate certificate_from_json(const Json& doc) {
  try {
    return certificate_fields(doc);
  } catch (const Json::exception& e) {
    schema(std::string("malformed certificate: ") + e.what());
  }
}

SeparationCertificate certificate_fields(const Json& doc) {
  if (!doc.is_object()) schema("certificate must be an object");
  for (const char* key : {"dim", "capacity", "directions", "M", "method"}) {
    if (!doc.contains(key)) schema(std::string("certificate is missing \"") + key + "\"");
  }
  SeparationCertificate c;
  c.family.dim = doc["dim"].get<std::size_t>();
  c.family.capacity = doc["capacity"].get<std::size_t>();
  for (const Json& d : doc["directions"]) c.family.directions.push_back(number_array(d, "direction"));
  c.separation = doc["M"].get<double>();
  const std::string method = doc["method"].get<std::string>();
  if (method == "analytic") {
    c.method = CertificateMethod::kAnalytic;
  } else if (method == "grid-oracle") {
    c.method = CertificateMethod::kGridOracle;
  } else {
    schema("certificate method must be \"analytic\" or \"grid-oracle\"");
  }
  c.oracle_value = doc.value("oracle_value", 0.0);
  c.closed_form = doc.value("closed_form", 0.0);
  if (!(c.separation >= 1.0) || !std::isfinite(c.separation)) schema("certificate M must be >= 1");
  validate_family(c.family);
  return c;
}

Json to_json(const SeparationReport& r) {
  Json out{{"pairs_tested", r.pairs_tested},
           {"search_iterations", r.search_iterations},
           {"worst_ratio", r.worst_ratio},
           {"required_ratio", 1.0 / r.separation},
           {"max_component_ratio", r.max_component_ratio},
           {"M", r.separation},
           {"separation_ok", r.separation_ok},
           {"one_lipschitz_ok", r.one_lipschitz_ok},
           {"seed", r.seed}};
  out["worst_pair"] = r.worst_a ? Json{{"a", to_json(*r.worst_a)}, {"b", to_json(*r.worst_b)}}
                                : Json(nullptr);
  return out;
}

Json to_json(const DistortionReport& r) {
  Json out{{"map_id", r.map_id},
           {"samples", r.samples},
           {"search_iterations", r.search_iterations},
           {"lower_ratio", r.lower_ratio},
           {"upper_ratio", r.upper_ratio},
           {"witness_low", witness_json(r.witness_low)},
           {"witness_high", witness_json(r.witness_high)},
           {"certified_upper", optional_number(r.certified_upper)},
           {"certified_lower", optional_number(r.certified_lower)},
           {"within_certified", r.within_certified()},
           {"seed", r.seed}};
  return out;
}

Json describe(const EmbeddingPipeline& p) {
  Json stages = Json::array();
  for (const Stage& s : p.stages()) {
    Json j = stage_json(s);
    if (s.kind == StageKind::kProject && p.separation()) {
      j["family"] = to_json(*p.separation());
    } else if (s.kind == StageKind::kRecurse && p.sub_pipeline()) {
      j["copies"] = p.capacity();
      j["pipeline"] = describe(*p.sub_pipeline());
    } else if (s.kind == StageKind::kAffineNormalize) {
      j["center"] = p.center();
      j["scale"] = p.scale();
      j["diameter_bound"] = p.diameter_bound();
    }
    stages.push_back(std::move(j));
  }
  const CertifiedBounds bounds = certified_bounds(p);
  return Json{{"n", p.capacity()},
              {"output_dim", p.output_dim()},
              {"stages", std::move(stages)},
              {"certified", {{"lower", optional_number(bounds.lower)}, {"upper", bounds.upper}}}};
}

Json to_json(const SampledMap& m) {
  Json images = Json::array();
  for (const PointSet& s : m.images) images.push_back(to_json(s));
  return Json{{"domain", m.domain}, {"images", std::move(images)}, {"L", m.lipschitz}, {"D", m.diameter}};
}

SampledMap sampled_map_from_json(const Json& doc) {
  try {
    return sampled_map_fields(doc);
  } catch (const Json::exception& e) {
    schema(std::string("malformed sampled map: ") + e.what());
  }
}

SampledMap sampled_map_fields(const Json& doc) {
  if (!doc.is_object()) schema("sampled map must be an object");
  for (const char* key : {"domain", "images", "L"}) {
    if (!doc.contains(key)) schema(std::string("sampled map is missing \"") + key + "\"");
  }
  std::vector<Vec> domain;
  for (const Json& p : doc["domain"]) domain.push_back(number_array(p, "domain point"));
  std::vector<PointSet> images;
  for (const Json& s : doc["images"]) images.push_back(point_set_from_json(s));
  if (!doc["L"].is_number()) schema("\"L\" must be a number");
  SampledMap m = make_sampled_map(std::move(domain), std::move(images), doc["L"].get<double>());
  if (doc.contains("D") && doc["D"].is_number() &&
      std::abs(doc["D"].get<double>() - m.diameter) > 1e-9 * std::max(1.0, m.diameter)) {
    schema("\"D\" does not match the domain diameter");
  }
  return m;
}

Json to_json(const ExtensionResult& r, bool with_map) {
  Json out{{"sphere_points", r.sphere_points},
           {"radial_steps", r.radial_steps},
           {"grid_constant", r.grid_constant},
           {"factor", r.factor},
           {"radial_constant", r.radial_constant},
           {"sphere_constants", r.sphere_constants},
           {"decomposed", r.decomposed}};
  if (with_map) out["map"] = to_json(r.map);
  return out;
}

}  // namespace symprod
