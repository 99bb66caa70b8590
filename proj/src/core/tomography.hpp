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

#ifndef SYMPROD_CORE_TOMOGRAPHY_HPP_
#define SYMPROD_CORE_TOMOGRAPHY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/point_set.hpp"

namespace symprod {

// q+1 pairwise non-parallel lines through the origin of R^d. Projecting along
// them separates sets of cardinality <= q.
struct LineFamily {
  std::size_t dim = 0;
  std::size_t capacity = 0;
  std::vector<Vec> directions;
};

// Planar families use angles j*pi/(q+1). For d > 2 the coordinate axes come
// first, followed by normalized Halton points that are not near-parallel to
// any earlier direction.
LineFamily make_line_family(std::size_t capacity, std::size_t dim);

// Throws DegenerateFamily or NonUnitDirection.
void validate_family(const LineFamily& family);

// Orthonormal basis of the orthogonal complement of u (d-1 vectors of
// length d). In the plane this is the rotation of u by +90 degrees.
std::vector<Vec> complement_basis(std::span<const double> u);

// Orthogonal projection onto u-perp, in the coordinates of complement_basis.
PointSet project_set(const PointSet& set, std::span<const double> direction);

std::vector<PointSet> project_family(const PointSet& set, const LineFamily& family);

// Euclidean product of componentwise Hausdorff distances.
double family_distance(std::span<const PointSet> a, std::span<const PointSet> b);
// Largest componentwise Hausdorff distance.
double family_max_distance(std::span<const PointSet> a, std::span<const PointSet> b);

enum class CertificateMethod { kAnalytic, kGridOracle };

struct SeparationCertificate {
  double separation = 0.0;   // M, already inflated by the margin
  CertificateMethod method = CertificateMethod::kGridOracle;
  LineFamily family;
  double oracle_value = 0.0;   // refined grid maximum of |x| at r = 1
  double closed_form = 0.0;    // 1 / sin(theta_min / 2)
};

inline constexpr double kSeparationMargin = 0.01;

// Least M (up to the margin) with T_j(r) and T_k(r) inside |x| < M r.
SeparationCertificate separation_constant(const LineFamily& family);

struct SeparationReport {
  std::size_t pairs_tested = 0;
  std::size_t search_iterations = 0;
  // min over pairs of max_j d_H(g_j A, g_j B) / d_H(A, B)
  double worst_ratio = 0.0;
  // max over pairs and j of d_H(g_j A, g_j B) / d_H(A, B)
  double max_component_ratio = 0.0;
  double separation = 0.0;
  bool separation_ok = true;
  bool one_lipschitz_ok = true;
  std::optional<PointSet> worst_a;
  std::optional<PointSet> worst_b;
  std::uint64_t seed = 0;

  bool passed() const { return separation_ok && one_lipschitz_ok; }
};

SeparationReport verify_separation(const SeparationCertificate& certificate,
                                   std::size_t pair_count, std::uint64_t seed,
                                   std::size_t search_iterations = 0);

}  // namespace symprod

#endif  // SYMPROD_CORE_TOMOGRAPHY_HPP_
