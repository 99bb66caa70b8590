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

#include "core/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "core/circle.hpp"
#include "core/distortion.hpp"
#include "core/sampler.hpp"

namespace symprod {

namespace {

constexpr double kUnitTolerance = 1e-9;
constexpr double kParallelTolerance = 1e-12;
constexpr std::size_t kPlanarGrid = 4096;
constexpr std::size_t kSpatialGrid = 100000;
// Halton directions closer than this (|cos|) to an existing one are skipped.
constexpr double kHaltonMaxCosine = 0.9;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Distance from unit vector w to the line spanned by unit vector u.
double line_distance(std::span<const double> w, std::span<const double> u) {
  const double c = dot(w, u);
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double r = w[k] - c * u[k];
    s += r * r;
  }
  return std::sqrt(s);
}

double sine_between(std::span<const double> u, std::span<const double> v) {
  return line_distance(u, v) / norm(u);
}

double radical_inverse(std::uint64_t index, std::uint64_t base) {
  double result = 0.0;
  double f = 1.0 / static_cast<double>(base);
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= static_cast<double>(base);
  }
  return result;
}

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

Vec halton_direction(std::uint64_t index, std::size_t dim) {
  Vec v(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    v[k] = 2.0 * radical_inverse(index, kPrimes[k % std::size(kPrimes)]) - 1.0;
  }
  const double n = norm(v);
  if (n < 1e-3) return {};
  for (double& c : v) c /= n;
  return v;
}

// Largest |x| with x = t*w inside both unit cylinders: min over the two lines
// of 1 / dist(w, L).
double cylinder_reach(std::span<const double> w, std::span<const double> u,
                      std::span<const double> v) {
  const double du = line_distance(w, u);
  const double dv = line_distance(w, v);
  const double big = std::numeric_limits<double>::infinity();
  return std::min(du > 0.0 ? 1.0 / du : big, dv > 0.0 ? 1.0 / dv : big);
}

double planar_oracle(std::span<const double> u, std::span<const double> v) {
  auto at = [&](double theta) {
    const double w[2] = {std::cos(theta), std::sin(theta)};
    return cylinder_reach(w, u, v);
  };
  const double step = std::numbers::pi / static_cast<double>(kPlanarGrid);
  std::size_t best_i = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < kPlanarGrid; ++i) {
    const double value = at(step * static_cast<double>(i));
    if (value > best) {
      best = value;
      best_i = i;
    }
  }
  // Golden-section refinement inside the neighbouring grid cells.
  double lo = step * (static_cast<double>(best_i) - 1.0);
  double hi = step * (static_cast<double>(best_i) + 1.0);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = hi - ratio * (hi - lo);
    const double m2 = lo + ratio * (hi - lo);
    if (at(m1) < at(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return std::max(best, at(0.5 * (lo + hi)));
}

Vec fibonacci_direction(std::size_t i, std::size_t count) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden * static_cast<double>(i);
  return {r * std::cos(phi), r * std::sin(phi), z};
}

double spatial_oracle(std::span<const double> u, std::span<const double> v) {
  const std::size_t dim = u.size();
  Vec best_w;
  double best = 0.0;
  for (std::size_t i = 0; i < kSpatialGrid; ++i) {
    Vec w = dim == 3 ? fibonacci_direction(i, kSpatialGrid) : halton_direction(i + 1, dim);
    if (w.empty()) continue;
    const double value = cylinder_reach(w, u, v);
    if (value > best) {
      best = value;
      best_w = std::move(w);
    }
  }
  // Random-direction pattern search on the sphere with a shrinking radius.
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double h = 0.05; h > 1e-10; h *= 0.5) {
    for (int attempt = 0; attempt < 256; ++attempt) {
      Vec w = best_w;
      for (double& c : w) c += h * gauss(rng);
      const double n = norm(w);
      for (double& c : w) c /= n;
      const double value = cylinder_reach(w, u, v);
      if (value > best) {
        best = value;
        best_w = std::move(w);
        attempt = 0;
      }
    }
  }
  return best;
}

}  // namespace

LineFamily make_line_family(std::size_t capacity, std::size_t dim) {
  if (capacity < 1) fail(ErrorCode::kBadRange, "line family capacity must be >= 1");
  if (dim < 2) fail(ErrorCode::kBadRange, "line family needs dimension >= 2");
  LineFamily family{dim, capacity, {}};
  const std::size_t count = capacity + 1;
  if (dim == 2) {
    for (std::size_t j = 0; j < count; ++j) {
      const auto p = turn_point(static_cast<double>(j) / (2.0 * static_cast<double>(count)));
      family.directions.push_back({p[0], p[1]});
    }
    return family;
  }
  for (std::size_t k = 0; k < dim && family.directions.size() < count; ++k) {
    Vec e(dim, 0.0);
    e[k] = 1.0;
    family.directions.push_back(std::move(e));
  }
  for (std::uint64_t index = 1; family.directions.size() < count; ++index) {
    Vec w = halton_direction(index, dim);
    if (w.empty()) continue;
    const bool separated = std::all_of(
        family.directions.begin(), family.directions.end(),
        [&](const Vec& u) { return std::abs(dot(u, w)) <= kHaltonMaxCosine; });
    if (separated) family.directions.push_back(std::move(w));
  }
  return family;
}

void validate_family(const LineFamily& family) {
  if (family.dim < 2 || family.capacity < 1) {
    fail(ErrorCode::kBadRange, "line family needs dim >= 2 and capacity >= 1");
  }
  if (family.directions.size() != family.capacity + 1) {
    fail(ErrorCode::kDegenerateFamily, "a family of capacity q needs q+1 lines");
  }
  for (const Vec& u : family.directions) {
    if (u.size() != family.dim) fail(ErrorCode::kDimensionMismatch, "direction has wrong dimension");
    if (std::abs(norm(u) - 1.0) > kUnitTolerance) {
      fail(ErrorCode::kNonUnitDirection, "direction is not a unit vector");
    }
  }
  for (std::size_t j = 0; j < family.directions.size(); ++j) {
    for (std::size_t k = j + 1; k < family.directions.size(); ++k) {
      if (sine_between(family.directions[j], family.directions[k]) <= kParallelTolerance) {
        fail(ErrorCode::kDegenerateFamily,
             "lines " + std::to_string(j) + " and " + std::to_string(k) + " are parallel");
      }
    }
  }
}

std::vector<Vec> complement_basis(std::span<const double> u) {
  const std::size_t d = u.size();
  if (d == 2) return {{-u[1] == 0.0 ? 0.0 : -u[1], u[0]}};
  std::size_t skip = 0;
  for (std::size_t k = 1; k < d; ++k) {
    if (std::abs(u[k]) > std::abs(u[skip])) skip = k;
  }
  std::vector<Vec> basis;
  for (std::size_t k = 0; k < d; ++k) {
    if (k == skip) continue;
    Vec e(d, 0.0);
    e[k] = 1.0;
    auto remove = [&](std::span<const double> b) {
      const double c = dot(e, b);
      for (std::size_t i = 0; i < d; ++i) e[i] -= c * b[i];
    };
    remove(u);
    for (const Vec& b : basis) remove(b);
    const double n = norm(e);
    for (double& c : e) c /= n;
    basis.push_back(std::move(e));
  }
  return basis;
}

PointSet project_set(const PointSet& set, std::span<const double> direction) {
  if (direction.size() != set.dim()) {
    fail(ErrorCode::kDimensionMismatch, "direction and set dimensions differ");
  }
  if (set.dim() < 2) fail(ErrorCode::kDimensionMismatch, "projection needs dimension >= 2");
  if (std::abs(norm(direction) - 1.0) > kUnitTolerance) {
    fail(ErrorCode::kNonUnitDirection, "projection direction is not a unit vector");
  }
  const std::vector<Vec> basis = complement_basis(direction);
  std::vector<double> flat;
  flat.reserve(set.size() * basis.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (const Vec& b : basis) flat.push_back(dot(set.point(i), b));
  }
  return PointSet::from_flat(flat, basis.size());
}

std::vector<PointSet> project_family(const PointSet& set, const LineFamily& family) {
  if (set.size() > family.capacity) {
    fail(ErrorCode::kCapacityExceeded,
         "set of cardinality " + std::to_string(set.size()) +
             " exceeds family capacity " + std::to_string(family.capacity));
  }
  std::vector<PointSet> out;
  out.reserve(family.directions.size());
  for (const Vec& u : family.directions) out.push_back(project_set(set, u));
  return out;
}

double family_distance(std::span<const PointSet> a, std::span<const PointSet> b) {
  if (a.size() != b.size()) fail(ErrorCode::kDimensionMismatch, "tuples differ in length");
  std::vector<double> parts;
  parts.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) parts.push_back(hausdorff_distance(a[j], b[j]));
  return product_distance(parts);
}

double family_max_distance(std::span<const PointSet> a, std::span<const PointSet> b) {
  if (a.size() != b.size()) fail(ErrorCode::kDimensionMismatch, "tuples differ in length");
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    worst = std::max(worst, hausdorff_distance(a[j], b[j]));
  }
  return worst;
}

SeparationCertificate separation_constant(const LineFamily& family) {
  validate_family(family);
  SeparationCertificate cert;
  cert.family = family;
  const auto& dirs = family.directions;
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    for (std::size_t k = j + 1; k < dirs.size(); ++k) {
      const double oracle = family.dim == 2 ? planar_oracle(dirs[j], dirs[k])
                                            : spatial_oracle(dirs[j], dirs[k]);
      cert.oracle_value = std::max(cert.oracle_value, oracle);
      // The acute angle theta between the lines gives sup |x| = 1/sin(theta/2).
      const double c = std::min(1.0, std::abs(dot(dirs[j], dirs[k])));
      const double theta = std::acos(c);
      cert.closed_form = std::max(cert.closed_form, 1.0 / std::sin(theta / 2.0));
    }
  }
  if (!(cert.oracle_value < std::numeric_limits<double>::infinity())) {
    fail(ErrorCode::kDegenerateFamily, "cylinder intersection is unbounded");
  }
  const bool oracle_dominates = cert.oracle_value >= cert.closed_form * (1.0 - 1e-6);
  cert.method = oracle_dominates ? CertificateMethod::kGridOracle : CertificateMethod::kAnalytic;
  cert.separation = (1.0 + kSeparationMargin) * std::max(cert.oracle_value, cert.closed_form);
  return cert;
}

SeparationReport verify_separation(const SeparationCertificate& certificate,
                                   std::size_t pair_count, std::uint64_t seed,
                                   std::size_t search_iterations) {
  const LineFamily family = certificate.family;
  validate_family(family);
  MapUnderTest map;
  map.id = "tomo-max";
  map.dim = family.dim;
  map.capacity = family.capacity;
  map.certified_upper = 1.0;
  map.certified_lower = 1.0 / certificate.separation;
  map.image_distance = [family](const PointSet& a, const PointSet& b) {
    const auto ga = project_family(a, family);
    const auto gb = project_family(b, family);
    return family_max_distance(ga, gb);
  };

  SeparationReport report;
  report.seed = seed;
  report.separation = certificate.separation;
  DistortionReport dist = estimate_distortion(map, domain_sampler(map, seed), pair_count);
  if (search_iterations > 0) {
    dist = adversarial_search(map, dist, SearchOptions{search_iterations, 0.1, false});
  }
  report.pairs_tested = dist.samples;
  report.search_iterations = dist.search_iterations;
  report.worst_ratio = dist.lower_ratio;
  report.max_component_ratio = dist.upper_ratio;
  report.separation_ok = dist.lower_ratio * certificate.separation >= 1.0 - 1e-9;
  report.one_lipschitz_ok = dist.upper_ratio <= 1.0 + 1e-9;
  if (dist.witness_low) {
    report.worst_a = dist.witness_low->a;
    report.worst_b = dist.witness_low->b;
  }
  return report;
}

}  // namespace symprod
