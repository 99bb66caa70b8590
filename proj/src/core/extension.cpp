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

#include "core/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/circle.hpp"
#include "core/retraction.hpp"

namespace symprod {

namespace {

constexpr double kRelativeSlack = 1e-9;

double domain_diameter(const std::vector<Vec>& domain) {
  double best = 0.0;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      best = std::max(best, euclidean_distance(domain[i], domain[j]));
    }
  }
  return best;
}

void check_shape(const SampledMap& f) {
  if (f.domain.empty()) fail(ErrorCode::kEmptyInput, "sampled map has no domain points");
  if (f.domain.size() != f.images.size()) {
    fail(ErrorCode::kDimensionMismatch, "domain and image counts differ");
  }
  const std::size_t k = f.domain.front().size();
  const std::size_t d = f.images.front().dim();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.domain[i].size() != k || f.images[i].dim() != d) {
      fail(ErrorCode::kDimensionMismatch, "sampled map mixes dimensions");
    }
  }
  if (!(f.lipschitz >= 0.0)) fail(ErrorCode::kNegativeParameter, "Lipschitz constant must be >= 0");
}

// Point of `set` closest to the origin; ties go to the first in canonical order.
Vec nearest_to_origin(const PointSet& set) {
  const Vec origin(set.dim(), 0.0);
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double d = euclidean_distance(set.point(i), origin);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  auto p = set.point(best);
  return Vec(p.begin(), p.end());
}

PointSet subset_within(const PointSet& set, const PointSet& anchor, double radius) {
  std::vector<double> flat;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (distance_to_set(set.point(i), anchor) <= radius) {
      auto p = set.point(i);
      flat.insert(flat.end(), p.begin(), p.end());
    }
  }
  if (flat.empty()) fail(ErrorCode::kDecompositionFailed, "a decomposition part is empty");
  return PointSet::from_flat(flat, set.dim());
}

struct BallGrid {
  std::vector<Vec> sphere;
  std::size_t rings;

  std::size_t index(std::size_t ring, std::size_t j) const {
    return ring == 0 ? 0 : 1 + (ring - 1) * sphere.size() + j;
  }
  double radius(std::size_t ring) const {
    return static_cast<double>(ring) / static_cast<double>(rings);
  }
  std::vector<Vec> points() const {
    std::vector<Vec> out;
    out.reserve(1 + rings * sphere.size());
    out.emplace_back(sphere.front().size(), 0.0);
    for (std::size_t i = 1; i <= rings; ++i) {
      const double r = radius(i);
      for (const Vec& x : sphere) {
        Vec p = x;
        if (i != rings) {
          for (double& c : p) c *= r;
        }
        out.push_back(std::move(p));
      }
    }
    return out;
  }
};

void check_sphere(const SampledMap& f, const ExtensionOptions& options) {
  check_shape(f);
  if (options.radial_steps < 1) fail(ErrorCode::kBadRange, "radial_steps must be >= 1");
  if (options.base_index >= f.size()) fail(ErrorCode::kBadRange, "base index out of range");
  const Vec origin(f.domain.front().size(), 0.0);
  for (const Vec& x : f.domain) {
    if (std::abs(euclidean_distance(x, origin) - 1.0) > kRelativeSlack) {
      fail(ErrorCode::kPreconditionViolated, "domain points must lie on the unit sphere");
    }
  }
}

// Images on the ball grid, without grid statistics.
std::vector<PointSet> radial_images(const SampledMap& f, std::size_t capacity,
                                    const ExtensionOptions& options) {
  const PointSet& base = f.images[options.base_index];
  const double allowed = 6.0 * f.lipschitz * (static_cast<double>(capacity) - 1.0);
  if (base.diameter() > allowed * (1.0 + kRelativeSlack) + kRelativeSlack) {
    fail(ErrorCode::kPreconditionViolated,
         "radial extension needs diam f(x0) <= 6 L (n-1)");
  }
  const Vec anchor = nearest_to_origin(base);
  const BallGrid grid{f.domain, options.radial_steps};
  std::vector<PointSet> images;
  images.reserve(1 + grid.rings * grid.sphere.size());
  images.push_back(PointSet::from_flat(anchor, anchor.size()));
  for (std::size_t i = 1; i <= grid.rings; ++i) {
    const double r = grid.radius(i);
    for (std::size_t j = 0; j < grid.sphere.size(); ++j) {
      const PointSet& y = f.images[j];
      if (i == grid.rings) {
        images.push_back(y);
        continue;
      }
      std::vector<double> flat = y.coords();
      for (std::size_t c = 0; c < flat.size(); ++c) {
        const double a = anchor[c % anchor.size()];
        flat[c] = a + r * (flat[c] - a);
      }
      images.push_back(PointSet::from_flat(flat, y.dim()));
    }
  }
  return images;
}

std::vector<PointSet> extend_images(const SampledMap& f, std::size_t capacity,
                                    const ExtensionOptions& options, bool& decomposed) {
  if (capacity < 1) fail(ErrorCode::kBadRange, "capacity must be >= 1");
  if (f.max_cardinality() > capacity) {
    fail(ErrorCode::kCapacityExceeded, "sampled map images exceed capacity");
  }
  const double threshold = 6.0 * f.lipschitz * (static_cast<double>(capacity) - 1.0);
  if (f.images[options.base_index].diameter() <= threshold) {
    return radial_images(f, capacity, options);
  }
  decomposed = true;
  const Decomposition parts = decompose_map(f, capacity, options.base_index);
  bool unused = false;
  const std::vector<PointSet> g = extend_images(parts.g, capacity - 1, options, unused);
  const std::vector<PointSet> h = extend_images(parts.h, capacity - 1, options, unused);
  const std::size_t doubled = 2 * capacity - 2;
  std::vector<PointSet> out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<double> flat = g[i].coords();
    flat.insert(flat.end(), h[i].coords().begin(), h[i].coords().end());
    PointSet joined = PointSet::from_flat(flat, g[i].dim());
    if (doubled > capacity) joined = retract_to(joined, doubled, capacity);
    out.push_back(std::move(joined));
  }
  return out;
}

ExtensionResult summarize(const SampledMap& f, std::vector<PointSet> images,
                          const ExtensionOptions& options) {
  const BallGrid grid{f.domain, options.radial_steps};
  ExtensionResult result;
  result.sphere_points = grid.sphere.size();
  result.radial_steps = grid.rings;

  // Ring statistics.
  for (std::size_t i = 1; i <= grid.rings; ++i) {
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.sphere.size(); ++j) {
      for (std::size_t l = j + 1; l < grid.sphere.size(); ++l) {
        const double dx = euclidean_distance(grid.sphere[j], grid.sphere[l]);
        if (dx <= 0.0) continue;
        worst = std::max(worst, hausdorff_distance(images[grid.index(i, j)],
                                                   images[grid.index(i, l)]) / dx);
      }
    }
    result.sphere_constants.push_back(worst);
  }
  const double dr = 1.0 / static_cast<double>(grid.rings);
  for (std::size_t j = 0; j < grid.sphere.size(); ++j) {
    for (std::size_t i = 0; i < grid.rings; ++i) {
      const double dy = hausdorff_distance(images[grid.index(i, j)], images[grid.index(i + 1, j)]);
      result.radial_constant = std::max(result.radial_constant, dy / dr);
    }
  }

  // Local grid constant: the domain is convex, so nearby pairs determine it.
  double spacing = dr;
  for (std::size_t j = 0; j < grid.sphere.size(); ++j) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < grid.sphere.size(); ++l) {
      if (l == j) continue;
      nearest = std::min(nearest, euclidean_distance(grid.sphere[j], grid.sphere[l]));
    }
    if (std::isfinite(nearest)) spacing = std::max(spacing, nearest);
  }
  result.map.domain = grid.points();
  result.map.images = std::move(images);
  result.map.diameter = domain_diameter(grid.sphere);
  result.grid_constant = grid_lipschitz(result.map, options.neighbor_factor * spacing);
  result.map.lipschitz = result.grid_constant;
  result.factor = f.lipschitz > 0.0 ? result.grid_constant / f.lipschitz : 0.0;
  return result;
}

}  // namespace

std::size_t SampledMap::max_cardinality() const {
  std::size_t best = 0;
  for (const PointSet& s : images) best = std::max(best, s.size());
  return best;
}

SampledMap make_sampled_map(std::vector<Vec> domain, std::vector<PointSet> images,
                            double lipschitz) {
  SampledMap f{std::move(domain), std::move(images), lipschitz, 0.0};
  check_shape(f);
  f.diameter = domain_diameter(f.domain);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const double dx = euclidean_distance(f.domain[i], f.domain[j]);
      const double dy = hausdorff_distance(f.images[i], f.images[j]);
      if (dy > lipschitz * dx * (1.0 + kRelativeSlack) + 1e-12) {
        fail(ErrorCode::kPreconditionViolated,
             "sampled map is not " + std::to_string(lipschitz) + "-Lipschitz on pair (" +
                 std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  return f;
}

double grid_lipschitz(const SampledMap& map, double radius) {
  double worst = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = i + 1; j < map.size(); ++j) {
      const double dx = euclidean_distance(map.domain[i], map.domain[j]);
      if (dx <= 0.0 || dx > radius) continue;
      worst = std::max(worst, hausdorff_distance(map.images[i], map.images[j]) / dx);
    }
  }
  return worst;
}

double grid_lipschitz(const SampledMap& map) {
  return grid_lipschitz(map, std::numeric_limits<double>::infinity());
}

Decomposition decompose_map(const SampledMap& f, std::size_t capacity, std::size_t base_index) {
  check_shape(f);
  if (capacity < 2) fail(ErrorCode::kBadRange, "decomposition needs n >= 2");
  if (base_index >= f.size()) fail(ErrorCode::kBadRange, "base index out of range");
  if (f.max_cardinality() > capacity) {
    fail(ErrorCode::kCapacityExceeded, "sampled map images exceed capacity");
  }
  const double LD = f.lipschitz * f.diameter;
  const PointSet& base = f.images[base_index];
  if (!(base.diameter() > 3.0 * LD * (static_cast<double>(capacity) - 1.0))) {
    fail(ErrorCode::kPreconditionViolated, "decomposition needs diam f(x0) > 3 L D (n-1)");
  }

  // Greedy maximal E: start at the point nearest 0, then sweep in canonical
  // order adding any point that keeps diam E < 3 L D (|E| - 1).
  const Vec seed = nearest_to_origin(base);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto p = base.point(i);
    if (std::equal(p.begin(), p.end(), seed.begin())) chosen.push_back(i);
  }
  auto diameter_with = [&](std::size_t extra) {
    double d = 0.0;
    for (std::size_t i : chosen) {
      d = std::max(d, euclidean_distance(base.point(i), base.point(extra)));
      for (std::size_t j : chosen) d = std::max(d, euclidean_distance(base.point(i), base.point(j)));
    }
    return d;
  };
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      if (diameter_with(i) < 3.0 * LD * static_cast<double>(chosen.size())) {
        chosen.push_back(i);
        grew = true;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<double> core_flat;
  std::vector<double> rest_flat;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto p = base.point(i);
    auto& dst = std::binary_search(chosen.begin(), chosen.end(), i) ? core_flat : rest_flat;
    dst.insert(dst.end(), p.begin(), p.end());
  }
  if (rest_flat.empty()) fail(ErrorCode::kDecompositionFailed, "maximal set is all of f(x0)");
  const PointSet core = PointSet::from_flat(core_flat, base.dim());
  const PointSet rest = PointSet::from_flat(rest_flat, base.dim());

  // Neighbourhood radius LD, widened by rounding slack only.
  const double radius = LD * (1.0 + kRelativeSlack) + 1e-12;
  std::vector<PointSet> g_images;
  std::vector<PointSet> h_images;
  for (const PointSet& y : f.images) {
    PointSet g = subset_within(y, core, radius);
    PointSet h = subset_within(y, rest, radius);
    if (g.size() + h.size() != y.size() || g.size() >= capacity || h.size() >= capacity) {
      fail(ErrorCode::kDecompositionFailed, "neighbourhoods of E and f(x0)\\E overlap");
    }
    g_images.push_back(std::move(g));
    h_images.push_back(std::move(h));
  }
  try {
    return Decomposition{make_sampled_map(f.domain, std::move(g_images), f.lipschitz),
                         make_sampled_map(f.domain, std::move(h_images), f.lipschitz), core};
  } catch (const Error& e) {
    fail(ErrorCode::kDecompositionFailed, std::string("decomposition part: ") + e.what());
  }
}

std::vector<Vec> circle_grid(std::size_t count) {
  if (count == 0) fail(ErrorCode::kBadRange, "circle grid needs at least one point");
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const auto p = turn_point(static_cast<double>(j) / static_cast<double>(count));
    out.push_back({p[0], p[1]});
  }
  return out;
}

ExtensionResult radial_extension(const SampledMap& f, std::size_t capacity,
                                 const ExtensionOptions& options) {
  check_sphere(f, options);
  return summarize(f, radial_images(f, capacity, options), options);
}

ExtensionResult ball_extension(const SampledMap& f, std::size_t capacity,
                               const ExtensionOptions& options) {
  check_sphere(f, options);
  bool decomposed = false;
  std::vector<PointSet> images = extend_images(f, capacity, options, decomposed);
  const BallGrid grid{f.domain, options.radial_steps};
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!(images[grid.index(grid.rings, j)] == f.images[j])) {
      fail(ErrorCode::kDecompositionFailed, "extension does not agree with f on the sphere");
    }
  }
  ExtensionResult result = summarize(f, std::move(images), options);
  result.decomposed = decomposed;
  return result;
}

}  // namespace symprod
