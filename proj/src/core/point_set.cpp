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

#include "core/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace symprod {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNegativeParameter: return "NegativeParameter";
    case ErrorCode::kDiameterViolation: return "DiameterViolation";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kBadRange: return "BadRange";
    case ErrorCode::kNonUnitDirection: return "NonUnitDirection";
    case ErrorCode::kDegenerateFamily: return "DegenerateFamily";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kDecompositionFailed: return "DecompositionFailed";
    case ErrorCode::kDegenerateSample: return "DegenerateSample";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

PointSet PointSet::from_flat(std::span<const double> coords, std::size_t dim) {
  if (dim == 0) fail(ErrorCode::kDimensionMismatch, "dimension must be positive");
  if (coords.empty()) fail(ErrorCode::kEmptyInput, "point set is empty");
  if (coords.size() % dim != 0) {
    fail(ErrorCode::kDimensionMismatch,
         "coordinate count " + std::to_string(coords.size()) +
             " is not a multiple of dimension " + std::to_string(dim));
  }
  for (double c : coords) {
    if (!std::isfinite(c)) {
      fail(ErrorCode::kNonFiniteCoordinate, "coordinate is not finite");
    }
  }
  const std::size_t count = coords.size() / dim;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return coords.subspan(i * dim, dim); };
  auto less = [&](std::size_t i, std::size_t j) {
    auto a = row(i);
    auto b = row(j);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  auto same = [&](std::size_t i, std::size_t j) {
    auto a = row(i);
    auto b = row(j);
    return std::equal(a.begin(), a.end(), b.begin());
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(), same), order.end());

  std::vector<double> flat;
  flat.reserve(order.size() * dim);
  for (std::size_t i : order) {
    for (double c : row(i)) flat.push_back(c == 0.0 ? 0.0 : c);
  }
  return PointSet(dim, std::move(flat));
}

PointSet PointSet::canonicalize(std::span<const Vec> raw, std::size_t dim) {
  if (raw.empty()) fail(ErrorCode::kEmptyInput, "point set is empty");
  std::vector<double> flat;
  flat.reserve(raw.size() * dim);
  for (const Vec& p : raw) {
    if (p.size() != dim) {
      fail(ErrorCode::kDimensionMismatch,
           "point has " + std::to_string(p.size()) + " coordinates, expected " +
               std::to_string(dim));
    }
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return from_flat(flat, dim);
}

PointSet PointSet::on_line(std::initializer_list<double> values) {
  return from_flat(std::span<const double>(values.begin(), values.size()), 1);
}

PointSet PointSet::on_line(std::span<const double> values) {
  return from_flat(values, 1);
}

std::vector<Vec> PointSet::points() const {
  std::vector<Vec> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto p = point(i);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

PointSet PointSet::translated(std::span<const double> offset) const {
  if (offset.size() != dim_) {
    fail(ErrorCode::kDimensionMismatch, "translation has wrong dimension");
  }
  std::vector<double> flat = coords_;
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += offset[i % dim_];
  return from_flat(flat, dim_);
}

PointSet PointSet::scaled(double factor) const {
  std::vector<double> flat = coords_;
  for (double& c : flat) c *= factor;
  return from_flat(flat, dim_);
}

double PointSet::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      best = std::max(best, euclidean_distance(point(i), point(j)));
    }
  }
  return best;
}

bool PointSet::contains(std::span<const double> p) const {
  for (std::size_t i = 0; i < size(); ++i) {
    auto q = point(i);
    if (std::equal(q.begin(), q.end(), p.begin(), p.end())) return true;
  }
  return false;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() == 1) return std::abs(a[0] - b[0]);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double distance_to_set(std::span<const double> p, const PointSet& set) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i) {
    best = std::min(best, euclidean_distance(p, set.point(i)));
  }
  return best;
}

namespace {

double directed_hausdorff(const PointSet& from, const PointSet& to) {
  double worst = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    worst = std::max(worst, distance_to_set(from.point(i), to));
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::kDimensionMismatch,
         "Hausdorff distance between sets of dimension " +
             std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double product_distance(double dx, double dy) { return std::hypot(dx, dy); }

double product_distance(std::span<const double> factor_distances) {
  double sum = 0.0;
  for (double d : factor_distances) sum += d * d;
  return std::sqrt(sum);
}

}  // namespace symprod
