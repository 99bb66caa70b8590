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

#include "symprod/symprod.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "core/cone.hpp"
#include "core/distortion.hpp"
#include "core/embedding.hpp"
#include "core/extension.hpp"
#include "core/json_io.hpp"
#include "core/maps.hpp"
#include "core/point_set.hpp"
#include "core/retraction.hpp"
#include "core/tomography.hpp"

struct symprod_pointset {
  symprod::PointSet set;
};

struct symprod_pipeline {
  std::shared_ptr<const symprod::EmbeddingPipeline> pipeline;
};

namespace {

using symprod::Json;

thread_local std::string g_last_error;

symprod_status set_error(symprod_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
symprod_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const symprod::Error& e) {
    return set_error(static_cast<symprod_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SYMPROD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SYMPROD_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

#define SYMPROD_REQUIRE(ptr)                                            \
  do {                                                                  \
    if ((ptr) == nullptr) {                                             \
      return set_error(SYMPROD_ERR_NULL_ARGUMENT, #ptr " is null");     \
    }                                                                   \
  } while (0)

std::size_t checked_capacity(std::size_t n) {
  if (n < 1) symprod::fail(symprod::ErrorCode::kBadRange, "n must be >= 1");
  return n;
}

std::vector<symprod::PointSet> read_sets(const char* json) {
  return symprod::point_sets_from_json(symprod::parse_json(json));
}

}  // namespace

extern "C" {

const char* symprod_last_error(void) { return g_last_error.c_str(); }

const char* symprod_status_name(symprod_status status) {
  switch (status) {
    case SYMPROD_OK: return "Ok";
    case SYMPROD_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case SYMPROD_ERR_NULL_ARGUMENT: return "NullArgument";
    case SYMPROD_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= SYMPROD_ERR_EMPTY_INPUT && status <= SYMPROD_ERR_SCHEMA) {
    // error_code_name returns views into string literals.
    return symprod::error_code_name(static_cast<symprod::ErrorCode>(status)).data();
  }
  return "Unknown";
}

void symprod_string_free(char* text) { std::free(text); }

symprod_status symprod_pointset_create(const double* coords, size_t count, size_t dim,
                                       symprod_pointset** out) {
  SYMPROD_REQUIRE(out);
  if (count > 0) SYMPROD_REQUIRE(coords);
  return guarded([&] {
    if (dim == 0) symprod::fail(symprod::ErrorCode::kDimensionMismatch, "dim must be >= 1");
    auto set = symprod::PointSet::from_flat({coords, count * dim}, dim);
    *out = new symprod_pointset{std::move(set)};
    return SYMPROD_OK;
  });
}

symprod_status symprod_pointset_from_json(const char* json, symprod_pointset** out) {
  SYMPROD_REQUIRE(json);
  SYMPROD_REQUIRE(out);
  return guarded([&] {
    auto set = symprod::point_set_from_json(symprod::parse_json(json));
    *out = new symprod_pointset{std::move(set)};
    return SYMPROD_OK;
  });
}

symprod_status symprod_pointset_to_json(const symprod_pointset* set, char** json) {
  SYMPROD_REQUIRE(set);
  SYMPROD_REQUIRE(json);
  return guarded([&] {
    *json = copy_string(symprod::dump_json(symprod::to_json(set->set)));
    return SYMPROD_OK;
  });
}

void symprod_pointset_destroy(symprod_pointset* set) { delete set; }

size_t symprod_pointset_size(const symprod_pointset* set) { return set ? set->set.size() : 0; }

size_t symprod_pointset_dim(const symprod_pointset* set) { return set ? set->set.dim() : 0; }

symprod_status symprod_pointset_coords(const symprod_pointset* set, double* out,
                                       size_t capacity) {
  SYMPROD_REQUIRE(set);
  const auto& coords = set->set.coords();
  if (capacity < coords.size()) {
    return set_error(SYMPROD_ERR_BUFFER_TOO_SMALL,
                     "need " + std::to_string(coords.size()) + " doubles");
  }
  SYMPROD_REQUIRE(out);
  std::copy(coords.begin(), coords.end(), out);
  return SYMPROD_OK;
}

symprod_status symprod_hausdorff(const symprod_pointset* a, const symprod_pointset* b,
                                 double* out) {
  SYMPROD_REQUIRE(a);
  SYMPROD_REQUIRE(b);
  SYMPROD_REQUIRE(out);
  return guarded([&] {
    *out = symprod::hausdorff_distance(a->set, b->set);
    return SYMPROD_OK;
  });
}

symprod_status symprod_min_gap(const symprod_pointset* set, size_t n, double* delta) {
  SYMPROD_REQUIRE(set);
  SYMPROD_REQUIRE(delta);
  return guarded([&] {
    *delta = symprod::min_gap(set->set, checked_capacity(n)).delta;
    return SYMPROD_OK;
  });
}

symprod_status symprod_retract_once(const symprod_pointset* set, size_t n,
                                    symprod_pointset** out) {
  SYMPROD_REQUIRE(set);
  SYMPROD_REQUIRE(out);
  return guarded([&] {
    *out = new symprod_pointset{symprod::retract_once(set->set, checked_capacity(n))};
    return SYMPROD_OK;
  });
}

symprod_status symprod_retract_to(const symprod_pointset* set, size_t n, size_t k,
                                  symprod_pointset** out) {
  SYMPROD_REQUIRE(set);
  SYMPROD_REQUIRE(out);
  return guarded([&] {
    *out = new symprod_pointset{symprod::retract_to(set->set, checked_capacity(n), k)};
    return SYMPROD_OK;
  });
}

symprod_status symprod_retract_json(const char* input_json, size_t n, size_t k,
                                    char** output_json) {
  SYMPROD_REQUIRE(input_json);
  SYMPROD_REQUIRE(output_json);
  return guarded([&] {
    checked_capacity(n);
    Json out = Json::array();
    for (const auto& set : read_sets(input_json)) {
      out.push_back(symprod::to_json(symprod::retract_to(set, n, k)));
    }
    *output_json = copy_string(symprod::dump_json(out));
    return SYMPROD_OK;
  });
}

symprod_status symprod_dimension(int n, uint64_t* out) {
  SYMPROD_REQUIRE(out);
  return guarded([&] {
    *out = symprod::dimension(n);
    return SYMPROD_OK;
  });
}

symprod_status symprod_pipeline_create(int n, symprod_pipeline** out) {
  SYMPROD_REQUIRE(out);
  return guarded([&] {
    auto built = std::make_shared<const symprod::EmbeddingPipeline>(
        symprod::EmbeddingPipeline::build(n));
    *out = new symprod_pipeline{std::move(built)};
    return SYMPROD_OK;
  });
}

void symprod_pipeline_destroy(symprod_pipeline* pipeline) { delete pipeline; }

int symprod_pipeline_capacity(const symprod_pipeline* pipeline) {
  return pipeline ? pipeline->pipeline->capacity() : 0;
}

size_t symprod_pipeline_output_dim(const symprod_pipeline* pipeline) {
  return pipeline ? pipeline->pipeline->output_dim() : 0;
}

symprod_status symprod_pipeline_embed(const symprod_pipeline* pipeline,
                                      const symprod_pointset* set, double* out,
                                      size_t capacity) {
  SYMPROD_REQUIRE(pipeline);
  SYMPROD_REQUIRE(set);
  const std::size_t m = pipeline->pipeline->output_dim();
  if (capacity < m) {
    return set_error(SYMPROD_ERR_BUFFER_TOO_SMALL, "need " + std::to_string(m) + " doubles");
  }
  SYMPROD_REQUIRE(out);
  return guarded([&] {
    const symprod::Vec v = pipeline->pipeline->embed(set->set);
    std::copy(v.begin(), v.end(), out);
    return SYMPROD_OK;
  });
}

symprod_status symprod_pipeline_describe(const symprod_pipeline* pipeline, char** json) {
  SYMPROD_REQUIRE(pipeline);
  SYMPROD_REQUIRE(json);
  return guarded([&] {
    *json = copy_string(symprod::dump_json(symprod::describe(*pipeline->pipeline)));
    return SYMPROD_OK;
  });
}

symprod_status symprod_pipeline_certified_bounds(const symprod_pipeline* pipeline,
                                                 double* lower, int* has_lower,
                                                 double* upper) {
  SYMPROD_REQUIRE(pipeline);
  SYMPROD_REQUIRE(lower);
  SYMPROD_REQUIRE(has_lower);
  SYMPROD_REQUIRE(upper);
  return guarded([&] {
    const auto bounds = symprod::certified_bounds(*pipeline->pipeline);
    *has_lower = bounds.lower.has_value() ? 1 : 0;
    *lower = bounds.lower.value_or(0.0);
    *upper = bounds.upper;
    return SYMPROD_OK;
  });
}

symprod_status symprod_embed_json(const symprod_pipeline* pipeline, const char* input_json,
                                  char** output_json) {
  SYMPROD_REQUIRE(pipeline);
  SYMPROD_REQUIRE(input_json);
  SYMPROD_REQUIRE(output_json);
  return guarded([&] {
    Json out = Json::array();
    for (const auto& set : read_sets(input_json)) {
      out.push_back({{"input", symprod::to_json(set)},
                     {"vector", pipeline->pipeline->embed(set)}});
    }
    *output_json = copy_string(symprod::dump_json(out));
    return SYMPROD_OK;
  });
}

symprod_status symprod_embed_rd_dimension(int n, int d, uint64_t* out) {
  SYMPROD_REQUIRE(out);
  return guarded([&] {
    *out = symprod::embed_rd_dimension(n, d);
    return SYMPROD_OK;
  });
}

symprod_status symprod_embed_rd_json(int n, int d, const char* input_json,
                                     char** output_json) {
  SYMPROD_REQUIRE(input_json);
  SYMPROD_REQUIRE(output_json);
  return guarded([&] {
    const auto sets = read_sets(input_json);
    const auto embedding = symprod::RdEmbedding::build(n, d);
    Json out = Json::array();
    for (const auto& set : sets) {
      out.push_back({{"input", symprod::to_json(set)}, {"vector", embedding.embed(set)}});
    }
    *output_json = copy_string(symprod::dump_json(out));
    return SYMPROD_OK;
  });
}

symprod_status symprod_tomo_certify(size_t q, size_t d, char** certificate_json) {
  SYMPROD_REQUIRE(certificate_json);
  return guarded([&] {
    const auto cert = symprod::separation_constant(symprod::make_line_family(q, d));
    *certificate_json = copy_string(symprod::dump_json(symprod::to_json(cert)));
    return SYMPROD_OK;
  });
}

symprod_status symprod_project_json(size_t q, size_t d, const char* input_json,
                                    char** output_json) {
  SYMPROD_REQUIRE(input_json);
  SYMPROD_REQUIRE(output_json);
  return guarded([&] {
    const auto family = symprod::make_line_family(q, d);
    Json out = Json::array();
    for (const auto& set : read_sets(input_json)) {
      if (set.dim() != d) {
        symprod::fail(symprod::ErrorCode::kDimensionMismatch,
                      "input set has dimension " + std::to_string(set.dim()));
      }
      if (set.size() > q) {
        symprod::fail(symprod::ErrorCode::kCapacityExceeded,
                      "input set has more than q points");
      }
      Json images = Json::array();
      for (const auto& image : symprod::project_family(set, family)) {
        images.push_back(symprod::to_json(image));
      }
      out.push_back({{"input", symprod::to_json(set)}, {"projections", std::move(images)}});
    }
    *output_json = copy_string(symprod::dump_json(out));
    return SYMPROD_OK;
  });
}

symprod_status symprod_tomo_verify(const char* certificate_json, uint64_t pairs,
                                   uint64_t search_iterations, uint64_t seed,
                                   char** report_json, int* passed) {
  SYMPROD_REQUIRE(certificate_json);
  SYMPROD_REQUIRE(report_json);
  SYMPROD_REQUIRE(passed);
  return guarded([&] {
    const auto cert = symprod::certificate_from_json(symprod::parse_json(certificate_json));
    const auto report = symprod::verify_separation(cert, pairs, seed, search_iterations);
    Json out{{"certificate", symprod::to_json(cert)},
             {"verification", symprod::to_json(report)},
             {"passed", report.passed()}};
    *report_json = copy_string(symprod::dump_json(out));
    *passed = report.passed() ? 1 : 0;
    return SYMPROD_OK;
  });
}

symprod_status symprod_cone_check(const char* space_json, size_t origin, size_t points,
                                  uint64_t pairs, uint64_t seed, char** report_json,
                                  int* passed) {
  SYMPROD_REQUIRE(report_json);
  SYMPROD_REQUIRE(passed);
  return guarded([&] {
    std::optional<symprod::SampledSpace> space;
    if (space_json) {
      const auto set = symprod::point_set_from_json(symprod::parse_json(space_json));
      space.emplace(set.points(), origin);
    } else {
      space.emplace(symprod::SampledSpace::random_ball(seed, points, 3));
    }
    const auto report = symprod::check_cone_comparison(*space, pairs, seed);
    const bool ok = report.bound_10_ok && report.bound_12_ok;
    Json out = symprod::to_json(report);
    out["space_points"] = space->size();
    out["space_dim"] = space->dim();
    out["passed"] = ok;
    *report_json = copy_string(symprod::dump_json(out));
    *passed = ok ? 1 : 0;
    return SYMPROD_OK;
  });
}

symprod_status symprod_distortion_run(const char* map, int n, int d, uint64_t samples,
                                      uint64_t search_iterations, double step, uint64_t seed,
                                      char** report_json, char** csv_out, int* passed) {
  SYMPROD_REQUIRE(map);
  SYMPROD_REQUIRE(report_json);
  SYMPROD_REQUIRE(passed);
  return guarded([&] {
    if (!(step > 0.0) || !std::isfinite(step)) {
      symprod::fail(symprod::ErrorCode::kBadRange, "step must be positive");
    }
    const auto under_test = symprod::make_named_map(map, n, d);
    const auto sampler = symprod::domain_sampler(under_test, seed);
    std::vector<symprod::PairRecord> records;
    symprod::SamplingOptions sampling;
    if (csv_out) sampling.pairs = &records;
    const auto start = symprod::estimate_distortion(under_test, sampler, samples, sampling);
    symprod::SearchOptions search;
    search.iterations = search_iterations;
    search.step = step;
    const auto report = symprod::adversarial_search(under_test, start, search);
    // Retractions collapse distinct sets; only embeddings owe a positive lower ratio.
    const bool injective = under_test.certified_lower.has_value();
    const bool ok = report.within_certified() && (!injective || report.lower_ratio > 0.0);
    Json out = symprod::to_json(report);
    out["n"] = n;
    if (std::string_view(map) == "tomo") out["d"] = d;
    out["step"] = step;
    out["sampled_lower_ratio"] = start.lower_ratio;
    out["sampled_upper_ratio"] = start.upper_ratio;
    out["passed"] = ok;
    *report_json = copy_string(symprod::dump_json(out));
    if (csv_out) {
      std::ostringstream csv;
      csv.precision(17);
      csv << "domain_distance,image_distance\n";
      for (const auto& r : records) csv << r.domain_distance << ',' << r.image_distance << '\n';
      *csv_out = copy_string(csv.str());
    }
    *passed = ok ? 1 : 0;
    return SYMPROD_OK;
  });
}

symprod_status symprod_ball_extension_json(const char* map_json, size_t n, size_t radial_steps,
                                           int include_map, char** output_json) {
  SYMPROD_REQUIRE(map_json);
  SYMPROD_REQUIRE(output_json);
  return guarded([&] {
    const auto f = symprod::sampled_map_from_json(symprod::parse_json(map_json));
    symprod::ExtensionOptions options;
    options.radial_steps = radial_steps;
    const auto result = symprod::ball_extension(f, checked_capacity(n), options);
    *output_json = copy_string(symprod::dump_json(symprod::to_json(result, include_map != 0)));
    return SYMPROD_OK;
  });
}

}  // extern "C"
