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

#include "core/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "core/circle.hpp"
#include "core/cone.hpp"

namespace symprod {

namespace {

// Hausdorff diameter of the pinned sets: every such set contains 0 and 1, so
// two of them are within 1/2 of each other.
constexpr double kPinnedDiameter = 0.5;
// Lift target: image of the pinned sets has diameter <= 2 and contains 0.
constexpr double kLiftDiameter = 2.0;

void require_line(const PointSet& set) {
  if (set.dim() != 1) fail(ErrorCode::kDimensionMismatch, "expected a subset of R");
}

StageConstants compose(const StageConstants& a, const StageConstants& b) {
  return {a.lower * b.lower, a.upper * b.upper, a.lower_certified && b.lower_certified,
          a.upper_certified && b.upper_certified};
}

// Product with an isometric factor (or a comparable cone metric) widens the
// interval to contain 1.
StageConstants widen_to_unit(const StageConstants& c) {
  return {std::min(1.0, c.lower), std::max(1.0, c.upper), c.lower_certified,
          c.upper_certified};
}

}  // namespace

std::pair<double, PointSet> split_min(const PointSet& set) {
  require_line(set);
  const double lo = set.min_value();
  std::vector<double> shifted = set.coords();
  for (double& v : shifted) v -= lo;
  return {lo, PointSet::on_line(shifted)};
}

PinnedNormalization pinned_normalize(const PointSet& set) {
  require_line(set);
  if (set.min_value() != 0.0) {
    fail(ErrorCode::kPreconditionViolated, "pinned normalization needs min B = 0");
  }
  PinnedNormalization out;
  out.scale = set.max_value();
  if (out.scale == 0.0) return out;
  std::vector<double> values = set.coords();
  for (double& v : values) v /= out.scale;
  values.back() = 1.0;
  out.pinned = PointSet::on_line(values);
  return out;
}

PointSet circle_map(const PointSet& pinned) {
  require_line(pinned);
  std::vector<double> flat;
  flat.reserve(2 * pinned.size());
  for (double e : pinned.coords()) {
    const auto p = turn_point(e);
    flat.push_back(p[0]);
    flat.push_back(p[1]);
  }
  return PointSet::from_flat(flat, 2);
}

std::uint64_t dimension(int n) {
  if (n < 1) fail(ErrorCode::kBadRange, "dimension needs n >= 1");
  if (n > 12) fail(ErrorCode::kOverflow, "dimension is only computed for n <= 12");
  // n!/k! = (k+1)(k+2)...n
  std::uint64_t sum = 0;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t term = 1;
    for (int i = k + 1; i <= n; ++i) term *= static_cast<std::uint64_t>(i);
    sum += term;
  }
  return 2 * sum;
}

std::string_view stage_name(StageKind kind) {
  switch (kind) {
    case StageKind::kPad: return "Pad";
    case StageKind::kSplit: return "Split";
    case StageKind::kPinnedNormalize: return "PinnedNormalize";
    case StageKind::kCircleMap: return "CircleMap";
    case StageKind::kProject: return "Project";
    case StageKind::kRecurse: return "Recurse";
    case StageKind::kAffineNormalize: return "AffineNormalize";
    case StageKind::kConeLift: return "ConeLift";
    case StageKind::kAssemble: return "Assemble";
  }
  return "Unknown";
}

EmbeddingPipeline EmbeddingPipeline::build(int n) {
  if (n < 1 || n > kMaxCapacity) {
    fail(ErrorCode::kBadRange, "pipeline capacity must be in [1, " +
                                   std::to_string(kMaxCapacity) + "], got " + std::to_string(n));
  }
  EmbeddingPipeline p;
  p.n_ = n;
  p.output_dim_ = static_cast<std::size_t>(dimension(n));
  if (n == 1) {
    p.stages_ = {{StageKind::kPad, {}}};
    return p;
  }

  p.sub_ = std::make_shared<const EmbeddingPipeline>(build(n - 1));
  p.certificate_ = separation_constant(make_line_family(static_cast<std::size_t>(n - 1), 2));
  const double M = p.certificate_->separation;
  const double copies = static_cast<double>(n);

  // Split: |min A - min B| <= d_H and d_H(A - min A, B - min B) <= 2 d_H give
  // sqrt(5); conversely d_H(A, B) <= |b - b'| + d_H(B, B') <= sqrt(2) |.|.
  const StageConstants split{1.0 / std::sqrt(2.0), std::sqrt(5.0), true, true};
  // Min-zero sets carry the Hausdorff metric, which satisfies the cone scaling
  // hypotheses, hence d_H <= 10 d_c and d_c <= 12 d_H.
  const StageConstants pinned{1.0 / kConeUpperFactor, kConeLowerFactor, true, true};
  // Chord 2 sin(pi c) of the circular distance c <= 1/2, and the circular
  // Hausdorff distance equals the linear one on pinned sets.
  const StageConstants circle{4.0, 2.0 * std::numbers::pi, true, true};
  // Each projection is 1-Lipschitz; the max component is >= d_H / M.
  const StageConstants project{1.0 / M, std::sqrt(copies), true, true};
  const StageConstants recurse = p.sub_->overall();

  const StageConstants raw = compose(compose(circle, project), recurse);
  p.diameter_bound_ = raw.upper * kPinnedDiameter;
  p.scale_ = kLiftDiameter / p.diameter_bound_;
  const StageConstants affine{p.scale_, p.scale_, true, true};
  p.inner_ = compose(raw, affine);

  const StageConstants lift{1.0 / kConeLowerFactor, kConeUpperFactor, true, true};
  const StageConstants cone_branch = compose(compose(pinned, widen_to_unit(p.inner_)), lift);
  p.overall_ = compose(split, widen_to_unit(cone_branch));

  p.stages_ = {
      {StageKind::kSplit, split},        {StageKind::kPinnedNormalize, pinned},
      {StageKind::kCircleMap, circle},   {StageKind::kProject, project},
      {StageKind::kRecurse, recurse},    {StageKind::kAffineNormalize, affine},
      {StageKind::kConeLift, lift},      {StageKind::kAssemble, {}},
  };
  p.center_ = p.raw_pinned_image(PointSet::on_line({0.0, 1.0}));
  return p;
}

Vec EmbeddingPipeline::raw_pinned_image(const PointSet& pinned) const {
  const PointSet on_circle = circle_map(pinned);
  const std::vector<PointSet> shadows = project_family(on_circle, certificate_->family);
  Vec out;
  out.reserve(output_dim_ - 2);
  for (const PointSet& s : shadows) {
    const Vec part = sub_->embed(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Vec EmbeddingPipeline::embed_pinned(const PointSet& pinned) const {
  if (n_ < 2) fail(ErrorCode::kBadRange, "pinned sets only exist for n >= 2");
  require_line(pinned);
  if (pinned.size() > static_cast<std::size_t>(n_)) {
    fail(ErrorCode::kCapacityExceeded, "pinned set exceeds capacity");
  }
  if (pinned.min_value() != 0.0 || pinned.max_value() != 1.0) {
    fail(ErrorCode::kPreconditionViolated, "pinned set must contain 0 and 1 and lie in [0,1]");
  }
  Vec out = raw_pinned_image(pinned);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scale_ * (out[i] - center_[i]);
  return out;
}

Vec EmbeddingPipeline::embed(const PointSet& set) const {
  require_line(set);
  if (set.size() > static_cast<std::size_t>(n_)) {
    fail(ErrorCode::kCapacityExceeded,
         "set of cardinality " + std::to_string(set.size()) + " exceeds capacity " +
             std::to_string(n_));
  }
  if (n_ == 1) return {set.value(0), 0.0};

  auto [lo, shifted] = split_min(set);
  const PinnedNormalization norm = pinned_normalize(shifted);
  Vec out;
  out.reserve(output_dim_);
  out.push_back(lo);
  if (!norm.pinned) {
    out.resize(output_dim_ - 1, 0.0);
    out.push_back(1.0);
    return out;
  }
  const Vec lifted = euclidean_cone_lift(norm.scale, embed_pinned(*norm.pinned));
  out.insert(out.end(), lifted.begin(), lifted.end());
  return out;
}

RdEmbedding RdEmbedding::build(int n, int d) {
  if (d < 2 || d > 3) fail(ErrorCode::kBadRange, "embed_rd supports d in {2, 3}");
  if (n < 1 || n > kMaxCapacity) {
    fail(ErrorCode::kBadRange, "embed_rd supports n in [1, " + std::to_string(kMaxCapacity) + "]");
  }
  RdEmbedding e;
  e.n_ = n;
  e.d_ = d;
  for (int level = d; level >= 2; --level) {
    LineFamily family = make_line_family(static_cast<std::size_t>(n), static_cast<std::size_t>(level));
    validate_family(family);
    e.families_.push_back(std::move(family));
  }
  e.pipeline_ = std::make_shared<const EmbeddingPipeline>(EmbeddingPipeline::build(n));
  return e;
}

std::size_t RdEmbedding::output_dim() const {
  return static_cast<std::size_t>(embed_rd_dimension(n_, d_));
}

Vec RdEmbedding::embed(const PointSet& set) const {
  if (set.dim() != static_cast<std::size_t>(d_)) {
    fail(ErrorCode::kDimensionMismatch, "set dimension differs from the embedding's d");
  }
  if (set.size() > static_cast<std::size_t>(n_)) {
    fail(ErrorCode::kCapacityExceeded, "set exceeds capacity " + std::to_string(n_));
  }
  std::vector<PointSet> level = {set};
  for (const LineFamily& family : families_) {
    std::vector<PointSet> next;
    next.reserve(level.size() * family.directions.size());
    for (const PointSet& s : level) {
      for (PointSet& shadow : project_family(s, family)) next.push_back(std::move(shadow));
    }
    level = std::move(next);
  }
  Vec out;
  out.reserve(output_dim());
  for (const PointSet& s : level) {
    const Vec part = pipeline_->embed(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Vec embed_rd(const PointSet& set, int n, int d) { return RdEmbedding::build(n, d).embed(set); }

std::uint64_t embed_rd_dimension(int n, int d) {
  if (d < 1) fail(ErrorCode::kBadRange, "d must be >= 1");
  std::uint64_t copies = 1;
  for (int i = 1; i < d; ++i) copies *= static_cast<std::uint64_t>(n + 1);
  return copies * dimension(n);
}

}  // namespace symprod
