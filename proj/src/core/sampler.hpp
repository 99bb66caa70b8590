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

#ifndef SYMPROD_CORE_SAMPLER_HPP_
#define SYMPROD_CORE_SAMPLER_HPP_

#include <cstdint>
#include <random>

#include "core/point_set.hpp"

namespace symprod {

enum class SampleDomain {
  kFree,    // (R^d)^(n): set centers drawn from the bounding box
  kPinned,  // subsets of [0,1] containing both 0 and 1
};

struct Box {
  Vec lo;
  Vec hi;
};

struct PairSample {
  PointSet a;
  PointSet b;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seeded source of random finite sets and pairs of sets. Pairs are stratified
// by cardinality (cycled), by spread (diameters 1e-2..1e2 for free sets) and by
// pair mode (independent, perturbed, translated, near-merged).
// Identical seeds produce identical streams.
class MetricSampler {
 public:
  MetricSampler(std::uint64_t seed, Box bounds, std::size_t capacity,
                SampleDomain domain = SampleDomain::kFree);

  static MetricSampler on_line(std::uint64_t seed, std::size_t capacity,
                               double half_width = 10.0);
  static MetricSampler in_cube(std::uint64_t seed, std::size_t dim,
                               std::size_t capacity, double half_width = 10.0);
  static MetricSampler pinned(std::uint64_t seed, std::size_t capacity);

  std::uint64_t seed() const { return seed_; }
  const Box& bounds() const { return bounds_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t dim() const { return bounds_.lo.size(); }
  SampleDomain domain() const { return domain_; }

  // Independent sampler whose seed is derived from this one's seed and index.
  MetricSampler stream(std::uint64_t index) const;

  PointSet next_set();
  PointSet next_set(std::size_t cardinality);
  PairSample next_pair();

  // Maps an arbitrary set back into the sampler's domain and capacity.
  PointSet constrain(const PointSet& set) const;

  std::mt19937_64& engine() { return rng_; }

 private:
  double uniform(double lo, double hi);
  double log_uniform(double lo_exp, double hi_exp);
  PointSet free_set(std::size_t cardinality, std::span<const double> center,
                    double spread, bool clustered);
  PointSet pinned_set(std::size_t cardinality, bool clustered);
  PointSet jitter(const PointSet& set, double magnitude);

  std::uint64_t seed_;
  Box bounds_;
  std::size_t capacity_;
  SampleDomain domain_;
  std::mt19937_64 rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace symprod

#endif  // SYMPROD_CORE_SAMPLER_HPP_
