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

#include "core/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "core/embedding.hpp"

namespace symprod {

namespace {

struct StreamResult {
  std::size_t samples = 0;
  std::optional<Witness> low;
  std::optional<Witness> high;
  std::vector<PairRecord> pairs;
};

std::optional<Witness> evaluate(const MapUnderTest& map, const PointSet& a,
                                const PointSet& b) {
  const double dom = hausdorff_distance(a, b);
  if (!(dom > kMinDomainDistance)) return std::nullopt;
  const double img = map.image_distance(a, b);
  return Witness{a, b, dom, img, img / dom};
}

StreamResult run_stream(const MapUnderTest& map, MetricSampler sampler,
                        std::size_t count, bool keep_pairs) {
  StreamResult out;
  for (std::size_t i = 0; i < count; ++i) {
    PairSample pair = sampler.next_pair();
    auto w = evaluate(map, pair.a, pair.b);
    if (!w) continue;
    ++out.samples;
    if (keep_pairs) out.pairs.push_back({w->domain_distance, w->image_distance});
    if (!out.low || w->ratio < out.low->ratio) out.low = *w;
    if (!out.high || w->ratio > out.high->ratio) out.high = std::move(*w);
  }
  return out;
}

}  // namespace

bool DistortionReport::within_certified() const {
  if (certified_upper && upper_ratio > *certified_upper * (1.0 + 1e-9)) return false;
  if (certified_lower && lower_ratio < *certified_lower * (1.0 - 1e-9)) return false;
  return true;
}

MetricSampler domain_sampler(const MapUnderTest& map, std::uint64_t seed) {
  if (map.domain == SampleDomain::kPinned) return MetricSampler::pinned(seed, map.capacity);
  return MetricSampler::in_cube(seed, map.dim, map.capacity);
}

DistortionReport estimate_distortion(const MapUnderTest& map,
                                     const MetricSampler& sampler,
                                     std::size_t count,
                                     const SamplingOptions& options) {
  if (count < 2) fail(ErrorCode::kBadRange, "distortion estimate needs count >= 2");
  const std::size_t streams = std::max<std::size_t>(1, options.streams);
  std::vector<StreamResult> results(streams);
  {
    std::vector<std::jthread> workers;
    workers.reserve(streams);
    for (std::size_t s = 0; s < streams; ++s) {
      const std::size_t share = count / streams + (s < count % streams ? 1 : 0);
      workers.emplace_back([&, s, share] {
        results[s] = run_stream(map, sampler.stream(s), share, options.pairs != nullptr);
      });
    }
  }

  DistortionReport report;
  report.map_id = map.id;
  report.seed = sampler.seed();
  report.certified_upper = map.certified_upper;
  report.certified_lower = map.certified_lower;
  for (StreamResult& r : results) {
    report.samples += r.samples;
    if (r.low && (!report.witness_low || r.low->ratio < report.witness_low->ratio)) {
      report.witness_low = std::move(r.low);
    }
    if (r.high && (!report.witness_high || r.high->ratio > report.witness_high->ratio)) {
      report.witness_high = std::move(r.high);
    }
    if (options.pairs) {
      options.pairs->insert(options.pairs->end(), r.pairs.begin(), r.pairs.end());
    }
  }
  if (report.samples == 0) {
    fail(ErrorCode::kDegenerateSample, "no pair of distinct inputs was drawn");
  }
  report.lower_ratio = report.witness_low->ratio;
  report.upper_ratio = report.witness_high->ratio;
  return report;
}

namespace {

class Searcher {
 public:
  Searcher(const MapUnderTest& map, std::uint64_t seed, double step)
      : map_(map), constrainer_(domain_sampler(map, seed)), rng_(splitmix64(seed ^ 0xA5A5A5A5ULL)),
        initial_step_(step) {}

  // One annealing move on a witness. Returns true when the ratio got worse
  // in the searched direction (lower for minimize, higher otherwise).
  bool move(Witness& w, double& step, std::size_t& rejections, bool minimize) {
    const std::size_t min_card = map_.domain == SampleDomain::kPinned ? 2 : 1;
    PointSet a = w.a;
    PointSet b = w.b;
    const bool touch_a = coin();
    PointSet& target = touch_a ? a : b;
    const double local = std::max(w.domain_distance, 1e-9);
    std::vector<Vec> pts = target.points();
    switch (rng_() % 5) {
      case 0:
        jitter_all(a, local * step);
        jitter_all(b, local * step);
        break;
      case 1: {
        const std::size_t i = rng_() % pts.size();
        for (double& c : pts[i]) c += local * step * gauss();
        target = constrainer_.constrain(PointSet::canonicalize(pts, target.dim()));
        break;
      }
      case 2: {
        const double wide = std::max({a.diameter(), b.diameter(), local});
        jitter_all(a, wide * step * 0.1);
        jitter_all(b, wide * step * 0.1);
        break;
      }
      case 3:
        if (pts.size() < map_.capacity) {
          Vec extra = pts[rng_() % pts.size()];
          for (double& c : extra) c += local * step * gauss();
          pts.push_back(std::move(extra));
          target = constrainer_.constrain(PointSet::canonicalize(pts, target.dim()));
        }
        break;
      default:
        if (pts.size() > min_card) {
          pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(rng_() % pts.size()));
          target = constrainer_.constrain(PointSet::canonicalize(pts, target.dim()));
        }
        break;
    }
    auto candidate = evaluate(map_, a, b);
    const bool better = candidate && (minimize ? candidate->ratio < w.ratio
                                               : candidate->ratio > w.ratio);
    if (better) {
      w = std::move(*candidate);
      step *= 0.995;
      return true;
    }
    if (++rejections % 1000 == 0) step = initial_step_;
    return false;
  }

 private:
  bool coin() { return (rng_() & 1U) != 0; }
  double gauss() { return normal_(rng_); }

  void jitter_all(PointSet& set, double magnitude) {
    std::vector<double> flat = set.coords();
    for (double& c : flat) c += magnitude * gauss();
    set = constrainer_.constrain(PointSet::from_flat(flat, set.dim()));
  }

  const MapUnderTest& map_;
  MetricSampler constrainer_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  double initial_step_;
};

}  // namespace

DistortionReport adversarial_search(const MapUnderTest& map,
                                    const DistortionReport& start,
                                    const SearchOptions& options) {
  DistortionReport report = start;
  if (options.iterations == 0 || !start.witness_low || !start.witness_high) return report;
  Searcher searcher(map, start.seed + start.search_iterations, options.step);
  Witness low = *start.witness_low;
  Witness high = *start.witness_high;
  double low_step = options.step;
  double high_step = options.step;
  std::size_t low_rejections = 0;
  std::size_t high_rejections = 0;
  for (std::size_t i = 0; i < options.iterations; ++i) {
    if (i % 2 == 0) {
      searcher.move(low, low_step, low_rejections, true);
    } else {
      searcher.move(high, high_step, high_rejections, false);
    }
    if (options.record_history) {
      report.lower_history.push_back(low.ratio);
      report.upper_history.push_back(high.ratio);
    }
  }
  report.lower_ratio = low.ratio;
  report.upper_ratio = high.ratio;
  report.witness_low = std::move(low);
  report.witness_high = std::move(high);
  report.search_iterations += options.iterations;
  return report;
}

CertifiedBounds certified_bounds(const EmbeddingPipeline& pipeline) {
  const StageConstants overall = pipeline.overall();
  CertifiedBounds out;
  out.upper = overall.upper;
  if (overall.lower_certified) out.lower = overall.lower;
  return out;
}

}  // namespace symprod
