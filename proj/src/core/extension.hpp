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

#ifndef SYMPROD_CORE_EXTENSION_HPP_
#define SYMPROD_CORE_EXTENSION_HPP_

#include <cstddef>
#include <vector>

#include "core/point_set.hpp"

namespace symprod {

// A map from a finite subset of R^k (Euclidean metric) into finite sets,
// with its declared Lipschitz constant L and domain diameter D.
struct SampledMap {
  std::vector<Vec> domain;
  std::vector<PointSet> images;
  double lipschitz = 0.0;
  double diameter = 0.0;

  std::size_t size() const { return domain.size(); }
  std::size_t max_cardinality() const;
};

// Computes D and checks d_H(f(x), f(y)) <= L |x - y| on every pair
// (relative tolerance 1e-9). Throws PreconditionViolated otherwise.
SampledMap make_sampled_map(std::vector<Vec> domain, std::vector<PointSet> images,
                            double lipschitz);

// max d_H(f(x), f(y)) / |x - y| over pairs closer than `radius`.
double grid_lipschitz(const SampledMap& map, double radius);
double grid_lipschitz(const SampledMap& map);

struct Decomposition {
  SampledMap g;
  SampledMap h;
  PointSet core;  // the maximal set E inside f(x0)
};

// Splits f = g u h with g, h L-Lipschitz into sets of cardinality <= n-1,
// given diam f(x0) > 3 L D (n-1).
Decomposition decompose_map(const SampledMap& f, std::size_t capacity, std::size_t base_index);

// count equally spaced points on the unit circle; count = 128 gives pi/64.
std::vector<Vec> circle_grid(std::size_t count);

struct ExtensionOptions {
  std::size_t radial_steps = 64;
  std::size_t base_index = 0;
  // Neighbour radius for the grid constant, in units of the grid spacing.
  double neighbor_factor = 2.0;
};

// Ball grid layout: index 0 is the centre; ring i = 1..R at radius i/R holds
// the sphere points in order at 1 + (i-1) S + j. Ring R is the boundary.
struct ExtensionResult {
  SampledMap map;
  std::size_t sphere_points = 0;
  std::size_t radial_steps = 0;
  double grid_constant = 0.0;   // local grid Lipschitz constant on the ball
  double factor = 0.0;          // grid_constant / L
  // Ring i (index i-1): max d_H(F(r x), F(r y)) / |x - y| over sphere pairs.
  std::vector<double> sphere_constants;
  // max over rays of d_H(F(r x), F(r' x)) / |r - r'| for adjacent radii.
  double radial_constant = 0.0;
  bool decomposed = false;
};

// F(r x) = v + r (f(x) - v), with v the point of f(x0) nearest 0. Needs
// diam f(x0) <= 6 L (n-1).
ExtensionResult radial_extension(const SampledMap& f, std::size_t capacity,
                                 const ExtensionOptions& options = {});

// Extension into R^(n) agreeing with f on the sphere: decompose and recurse
// when diam f(x0) > 6 L (n-1), retracting the union from R^(2n-2) to R^(n);
// otherwise the radial extension.
ExtensionResult ball_extension(const SampledMap& f, std::size_t capacity,
                               const ExtensionOptions& options = {});

}  // namespace symprod

#endif  // SYMPROD_CORE_EXTENSION_HPP_
