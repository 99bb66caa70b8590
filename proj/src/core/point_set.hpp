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

#ifndef SYMPROD_CORE_POINT_SET_HPP_
#define SYMPROD_CORE_POINT_SET_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace symprod {

using Vec = std::vector<double>;

// A nonempty finite subset of R^d, stored flat in lexicographic order with
// exact duplicates removed. This is the element type of (R^d)^(n).
class PointSet {
 public:
  // Sorts, removes exact duplicates and normalizes -0.0 to +0.0.
  static PointSet canonicalize(std::span<const Vec> raw, std::size_t dim);
  static PointSet from_flat(std::span<const double> coords, std::size_t dim);
  // Convenience for subsets of the line.
  static PointSet on_line(std::initializer_list<double> values);
  static PointSet on_line(std::span<const double> values);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  // Only meaningful for dim() == 1.
  double value(std::size_t i) const { return coords_[i]; }
  double min_value() const { return coords_.front(); }
  double max_value() const { return coords_.back(); }

  const std::vector<double>& coords() const { return coords_; }
  std::vector<Vec> points() const;

  PointSet translated(std::span<const double> offset) const;
  PointSet scaled(double factor) const;
  double diameter() const;
  bool contains(std::span<const double> p) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }

 private:
  PointSet(std::size_t dim, std::vector<double> coords)
      : dim_(dim), coords_(std::move(coords)) {}

  std::size_t dim_;
  std::vector<double> coords_;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);
double distance_to_set(std::span<const double> p, const PointSet& set);
double hausdorff_distance(const PointSet& a, const PointSet& b);

// Euclidean product metric: sqrt(d_X^2 + d_Y^2).
double product_distance(double dx, double dy);
// Same convention over any number of factors.
double product_distance(std::span<const double> factor_distances);

}  // namespace symprod

#endif  // SYMPROD_CORE_POINT_SET_HPP_
