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

#include "core/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "core/sampler.hpp"

namespace symprod {

namespace {

constexpr double kDiameterSlack = 1e-9;

void require_parameter(double t) {
  if (!(t >= 0.0)) fail(ErrorCode::kNegativeParameter, "cone parameter must be >= 0");
}

}  // namespace

SampledSpace::SampledSpace(std::vector<Vec> points, std::size_t origin)
    : dim_(points.empty() ? 0 : points.front().size()), origin_(origin) {
  if (points.empty()) fail(ErrorCode::kEmptyInput, "sampled space is empty");
  if (origin >= points.size()) fail(ErrorCode::kBadRange, "origin index out of range");
  for (const Vec& p : points) {
    if (p.size() != dim_ || dim_ == 0) {
      fail(ErrorCode::kDimensionMismatch, "sampled space points differ in dimension");
    }
    for (double c : p) {
      if (!std::isfinite(c)) fail(ErrorCode::kNonFiniteCoordinate, "non-finite coordinate");
    }
  }
  const Vec base = points[origin];
  for (Vec& p : points) {
    for (std::size_t k = 0; k < dim_; ++k) p[k] -= base[k];
  }
  points_ = std::move(points);
  if (diameter() > 2.0 + kDiameterSlack) {
    fail(ErrorCode::kDiameterViolation,
         "sampled space has diameter " + std::to_string(diameter()) + " > 2");
  }
}

SampledSpace SampledSpace::random_ball(std::uint64_t seed, std::size_t count,
                                       std::size_t dim, double radius) {
  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec> pts;
  pts.emplace_back(dim, 0.0);
  while (pts.size() < count) {
    Vec p(dim);
    double norm = 0.0;
    for (double& c : p) {
      c = gauss(rng);
      norm += c * c;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double r = radius * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
    for (double& c : p) c *= r / norm;
    pts.push_back(std::move(p));
  }
  return SampledSpace(std::move(pts), 0);
}

double SampledSpace::distance(std::size_t i, std::size_t j) const {
  return euclidean_distance(points_[i], points_[j]);
}

double SampledSpace::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      best = std::max(best, distance(i, j));
    }
  }
  return best;
}

double cone_distance(double t1, double t2, double base_distance) {
  require_parameter(t1);
  require_parameter(t2);
  if (t1 <= kApexTolerance && t2 <= kApexTolerance) return 0.0;
  return std::abs(t1 - t2) + std::min(t1, t2) * base_distance;
}

double cone_distance(const ConePoint& p, const ConePoint& q, const SampledSpace& space) {
  return cone_distance(p.t, q.t, space.distance(p.x, q.x));
}

double cone_distance_classic(double t1, double t2, double base_distance) {
  require_parameter(t1);
  require_parameter(t2);
  if (base_distance > 2.0 + kDiameterSlack) {
    fail(ErrorCode::kDiameterViolation, "base distance exceeds 2");
  }
  const double sq = t1 * t1 + t2 * t2 - 2.0 * t1 * t2 * std::cos(base_distance);
  return std::sqrt(std::max(sq, 0.0));
}

double cone_distance_classic(const ConePoint& p, const ConePoint& q,
                             const SampledSpace& space) {
  return cone_distance_classic(p.t, q.t, space.distance(p.x, q.x));
}

Vec euclidean_cone_lift(double t, std::span<const double> embed_x) {
  require_parameter(t);
  Vec out;
  out.reserve(embed_x.size() + 1);
  for (double c : embed_x) out.push_back(t * c);
  out.push_back(1.0 - t);
  return out;
}

double lift_distance(const ConePoint& p, const ConePoint& q, const SampledSpace& space) {
  return euclidean_distance(euclidean_cone_lift(p.t, space.embedded(p.x)),
                            euclidean_cone_lift(q.t, space.embedded(q.x)));
}

ConeComparisonReport check_cone_comparison(const SampledSpace& space,
                                           std::size_t pair_count,
                                           std::uint64_t seed) {
  if (space.diameter() > 2.0 + kDiameterSlack) {
    fail(ErrorCode::kDiameterViolation, "sampled space has diameter > 2");
  }
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> exponent(-3.0, 2.0);
  std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
  auto draw_t = [&] { return std::pow(10.0, exponent(rng)); };

  ConeComparisonReport report;
  report.seed = seed;
  report.min_ratio = std::numeric_limits<double>::infinity();
  // Coincident draws are redrawn so that pair_count pairs are really compared.
  const std::size_t max_draws = 100 * pair_count + 100;
  for (std::size_t i = 0; report.pairs_tested < pair_count && i < max_draws; ++i) {
    ConePoint p{draw_t(), pick(rng)};
    ConePoint q{draw_t(), pick(rng)};
    switch (i % 5) {
      case 1: q.t = p.t; break;    // same level
      case 2: q.x = p.x; break;    // same ray
      case 3: p.t = 0.0; break;    // apex
      case 4: q.t = p.t * (1.0 + 1e-3 * std::uniform_real_distribution<double>(-1, 1)(rng)); break;
      default: break;
    }
    const double dc = cone_distance(p, q, space);
    if (dc == 0.0) continue;
    const double rho = lift_distance(p, q, space);
    const double ratio = rho / dc;
    ++report.pairs_tested;
    report.max_ratio = std::max(report.max_ratio, ratio);
    report.min_ratio = std::min(report.min_ratio, ratio);
    if (rho > kConeUpperFactor * dc) report.bound_10_ok = false;
    if (dc > kConeLowerFactor * rho) report.bound_12_ok = false;
  }
  if (report.pairs_tested == 0) report.min_ratio = 0.0;
  return report;
}

}  // namespace symprod
