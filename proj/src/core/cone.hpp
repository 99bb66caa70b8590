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

#ifndef SYMPROD_CORE_CONE_HPP_
#define SYMPROD_CORE_CONE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "core/point_set.hpp"

namespace symprod {

// Comparison constants between a cone metric satisfying the three scaling
// hypotheses and d_c: rho <= 10 d_c and d_c <= 12 rho.
inline constexpr double kConeUpperFactor = 10.0;
inline constexpr double kConeLowerFactor = 12.0;

// Parameters at or below this are treated as the apex.
inline constexpr double kApexTolerance = 1e-15;

// Finite sample of a bounded subset of R^m with a designated origin. Points
// are stored translated so that the origin sits at 0.
class SampledSpace {
 public:
  SampledSpace(std::vector<Vec> points, std::size_t origin);

  // Origin at index 0 plus count-1 points uniform in the ball of `radius`.
  static SampledSpace random_ball(std::uint64_t seed, std::size_t count,
                                  std::size_t dim, double radius = 1.0);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t origin() const { return origin_; }
  std::span<const double> embedded(std::size_t i) const { return points_[i]; }
  double distance(std::size_t i, std::size_t j) const;
  double diameter() const;

 private:
  std::size_t dim_;
  std::size_t origin_;
  std::vector<Vec> points_;
};

// A point t*x of Cone(X); x indexes a SampledSpace.
struct ConePoint {
  double t;
  std::size_t x;
};

// |t1 - t2| + min(t1, t2) * d(x1, x2).
double cone_distance(double t1, double t2, double base_distance);
double cone_distance(const ConePoint& p, const ConePoint& q, const SampledSpace& space);

// sqrt(t1^2 + t2^2 - 2 t1 t2 cos d(x1, x2)); requires d <= 2.
double cone_distance_classic(double t1, double t2, double base_distance);
double cone_distance_classic(const ConePoint& p, const ConePoint& q,
                             const SampledSpace& space);

// t * x + (1 - t) * e0, with e0 appended as the last coordinate.
Vec euclidean_cone_lift(double t, std::span<const double> embed_x);

// Distance between the Euclidean lifts of p and q.
double lift_distance(const ConePoint& p, const ConePoint& q, const SampledSpace& space);

struct ConeComparisonReport {
  double max_ratio = 0.0;  // max rho / d_c
  double min_ratio = 0.0;  // min rho / d_c
  std::size_t pairs_tested = 0;
  bool bound_10_ok = true;
  bool bound_12_ok = true;
  std::uint64_t seed = 0;
};

ConeComparisonReport check_cone_comparison(const SampledSpace& space,
                                           std::size_t pair_count,
                                           std::uint64_t seed);

}  // namespace symprod

#endif  // SYMPROD_CORE_CONE_HPP_
