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

#include "core/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace symprod {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

MetricSampler::MetricSampler(std::uint64_t seed, Box bounds,
                             std::size_t capacity, SampleDomain domain)
    : seed_(seed),
      bounds_(std::move(bounds)),
      capacity_(capacity),
      domain_(domain),
      rng_(splitmix64(seed)) {
  if (capacity_ == 0) fail(ErrorCode::kBadRange, "sampler capacity must be positive");
  if (bounds_.lo.empty() || bounds_.lo.size() != bounds_.hi.size()) {
    fail(ErrorCode::kDimensionMismatch, "sampler bounds are malformed");
  }
  if (domain_ == SampleDomain::kPinned && (bounds_.lo.size() != 1 || capacity_ < 2)) {
    fail(ErrorCode::kBadRange, "pinned sampling needs dim 1 and capacity >= 2");
  }
}

MetricSampler MetricSampler::on_line(std::uint64_t seed, std::size_t capacity,
                                     double half_width) {
  return in_cube(seed, 1, capacity, half_width);
}

MetricSampler MetricSampler::in_cube(std::uint64_t seed, std::size_t dim,
                                     std::size_t capacity, double half_width) {
  return MetricSampler(seed, Box{Vec(dim, -half_width), Vec(dim, half_width)},
                       capacity);
}

MetricSampler MetricSampler::pinned(std::uint64_t seed, std::size_t capacity) {
  return MetricSampler(seed, Box{{0.0}, {1.0}}, capacity, SampleDomain::kPinned);
}

MetricSampler MetricSampler::stream(std::uint64_t index) const {
  return MetricSampler(splitmix64(seed_ ^ splitmix64(index + 1)), bounds_,
                       capacity_, domain_);
}

double MetricSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

double MetricSampler::log_uniform(double lo_exp, double hi_exp) {
  return std::pow(10.0, uniform(lo_exp, hi_exp));
}

PointSet MetricSampler::free_set(std::size_t cardinality,
                                 std::span<const double> center, double spread,
                                 bool clustered) {
  const std::size_t d = dim();
  std::vector<double> flat;
  flat.reserve(cardinality * d);
  for (std::size_t i = 0; i < cardinality; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      flat.push_back(center[k] + spread * uniform(-0.5, 0.5));
    }
  }
  if (clustered && cardinality >= 2) {
    // Move the last point next to the first one.
    const double gap = spread * log_uniform(-6.0, -1.0);
    for (std::size_t k = 0; k < d; ++k) {
      flat[(cardinality - 1) * d + k] = flat[k] + gap * uniform(-1.0, 1.0);
    }
  }
  return PointSet::from_flat(flat, d);
}

PointSet MetricSampler::pinned_set(std::size_t cardinality, bool clustered) {
  std::vector<double> values = {0.0, 1.0};
  for (std::size_t i = 2; i < cardinality; ++i) values.push_back(uniform(0.0, 1.0));
  if (clustered && cardinality >= 3) {
    // Crowd one interior point against an endpoint or another point.
    const double gap = log_uniform(-6.0, -1.0);
    const std::size_t anchor = static_cast<std::size_t>(uniform(0.0, 3.0));
    const double base = anchor == 0 ? 0.0 : anchor == 1 ? 1.0 : values.back();
    const double moved = std::clamp(base + (base >= 0.5 ? -gap : gap), 0.0, 1.0);
    values[2] = moved;
  }
  return PointSet::on_line(values);
}

PointSet MetricSampler::next_set(std::size_t cardinality) {
  if (domain_ == SampleDomain::kPinned) {
    return pinned_set(std::clamp<std::size_t>(cardinality, 2, capacity_), false);
  }
  Vec center(dim());
  for (std::size_t k = 0; k < dim(); ++k) center[k] = uniform(bounds_.lo[k], bounds_.hi[k]);
  return free_set(std::clamp<std::size_t>(cardinality, 1, capacity_), center,
                  log_uniform(-2.0, 2.0), false);
}

PointSet MetricSampler::next_set() {
  const std::size_t lo = domain_ == SampleDomain::kPinned ? 2 : 1;
  const std::size_t card =
      lo + static_cast<std::size_t>(rng_() % (capacity_ - lo + 1));
  return next_set(card);
}

PointSet MetricSampler::jitter(const PointSet& set, double magnitude) {
  std::vector<double> flat = set.coords();
  if (domain_ == SampleDomain::kPinned) {
    for (double& v : flat) {
      if (v == 0.0 || v == 1.0) continue;
      v = std::clamp(v + magnitude * uniform(-1.0, 1.0), 0.0, 1.0);
    }
    return constrain(PointSet::from_flat(flat, 1));
  }
  for (double& v : flat) v += magnitude * uniform(-1.0, 1.0);
  return PointSet::from_flat(flat, set.dim());
}

PointSet MetricSampler::constrain(const PointSet& set) const {
  if (set.dim() != dim()) fail(ErrorCode::kDimensionMismatch, "set outside sampler domain");
  std::vector<Vec> pts = set.points();
  if (domain_ == SampleDomain::kPinned) {
    std::vector<double> values = {0.0, 1.0};
    for (const Vec& p : pts) {
      const double v = std::clamp(p[0], 0.0, 1.0);
      if (v != 0.0 && v != 1.0 && values.size() < capacity_) values.push_back(v);
    }
    return PointSet::on_line(values);
  }
  if (pts.size() > capacity_) pts.resize(capacity_);
  return PointSet::canonicalize(pts, dim());
}

PairSample MetricSampler::next_pair() {
  const std::uint64_t tick = counter_++;
  const std::size_t mode = tick % 4;
  const std::size_t lo = domain_ == SampleDomain::kPinned ? 2 : 1;
  const std::size_t span = capacity_ - lo + 1;
  const std::size_t card_a = lo + (tick / 4) % span;
  const std::size_t card_b = lo + static_cast<std::size_t>(rng_() % span);

  if (domain_ == SampleDomain::kPinned) {
    PointSet a = pinned_set(card_a, mode == 3);
    switch (mode) {
      case 0:
        return {a, pinned_set(card_b, false)};
      case 1:
      case 3:
        return {a, jitter(a, log_uniform(-5.0, -0.5))};
      default: {
        // Replace one interior point, or add/drop one.
        PointSet b = pinned_set(card_b, true);
        return {a, b};
      }
    }
  }

  Vec center(dim());
  for (std::size_t k = 0; k < dim(); ++k) center[k] = uniform(bounds_.lo[k], bounds_.hi[k]);
  const double spread = log_uniform(-2.0, 2.0);
  PointSet a = free_set(card_a, center, spread, mode == 3);
  switch (mode) {
    case 0: {
      Vec other(dim());
      for (std::size_t k = 0; k < dim(); ++k) {
        other[k] = center[k] + spread * uniform(-1.0, 1.0);
      }
      return {a, free_set(card_b, other, spread * log_uniform(-1.0, 1.0), false)};
    }
    case 1: {
      PointSet b = jitter(a, spread * log_uniform(-4.0, 0.0));
      std::vector<Vec> pts = b.points();
      const std::uint64_t roll = rng_() % 3;
      if (roll == 0 && pts.size() > 1) {
        pts.pop_back();
      } else if (roll == 1 && pts.size() < capacity_) {
        Vec extra = pts.front();
        for (double& v : extra) v += spread * log_uniform(-4.0, 0.0) * uniform(-1.0, 1.0);
        pts.push_back(extra);
      }
      return {a, PointSet::canonicalize(pts, dim())};
    }
    case 2: {
      Vec shift(dim());
      for (double& v : shift) v = spread * log_uniform(-4.0, 0.0) * uniform(-1.0, 1.0);
      return {a, a.scaled(1.0 + log_uniform(-4.0, -1.0) * uniform(-1.0, 1.0))
                     .translated(shift)};
    }
    default: {
      // Near-merged pair: drop the crowded point, then jitter slightly.
      std::vector<Vec> pts = a.points();
      if (pts.size() > 1) {
        std::size_t drop = 1;
        double closest = euclidean_distance(pts[0], pts[1]);
        for (std::size_t i = 0; i < pts.size(); ++i) {
          for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double dist = euclidean_distance(pts[i], pts[j]);
            if (dist < closest) {
              closest = dist;
              drop = j;
            }
          }
        }
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(drop));
      }
      PointSet merged = PointSet::canonicalize(pts, dim());
      return {a, jitter(merged, spread * log_uniform(-7.0, -2.0))};
    }
  }
}

}  // namespace symprod
