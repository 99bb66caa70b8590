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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "core/extension.hpp"
#include "core/retraction.hpp"
#include "support/instances.hpp"
#include "support/test_support.hpp"

namespace symprod {
namespace {

using testing::oracle_dist;
using testing::oracle_hausdorff;
using testing::generated_instance;
using testing::SetGenerator;

constexpr double kPi = std::numbers::pi;

PointSet line(std::initializer_list<double> v) { return PointSet::on_line(v); }

PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<Vec> pts = a.points();
  for (const Vec& p : b.points()) pts.push_back(p);
  return PointSet::canonicalize(pts, a.dim());
}

double set_gap(const PointSet& a, const PointSet& b) {
  double best = INFINITY;
  for (const Vec& p : a.points()) {
    for (const Vec& q : b.points()) best = std::min(best, oracle_dist(p, q));
  }
  return best;
}

SampledMap on_circle(std::size_t count, double lipschitz,
                     const std::function<PointSet(double)>& f) {
  std::vector<Vec> domain = circle_grid(count);
  std::vector<PointSet> images;
  for (const Vec& x : domain) images.push_back(f(std::atan2(x[1], x[0])));
  return make_sampled_map(std::move(domain), std::move(images), lipschitz);
}

TEST(SampledMap, RejectsFalseLipschitzConstant) {
  try {
    make_sampled_map({{0.0}, {1.0}}, {line({0}), line({2})}, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
  const auto f = make_sampled_map({{0.0}, {1.0}}, {line({0}), line({2})}, 2.0);
  EXPECT_EQ(f.diameter, 1.0);
  EXPECT_EQ(grid_lipschitz(f), 2.0);
}

TEST(CircleGrid, Spacing) {
  const auto g = circle_grid(128);
  ASSERT_EQ(g.size(), 128u);
  EXPECT_EQ(g[0], (Vec{1.0, 0.0}));
  EXPECT_EQ(g[64][0], -1.0);
  EXPECT_NEAR(oracle_dist(g[0], g[1]), 2 * std::sin(kPi / 128), 1e-15);
}

TEST(Decompose, WorkedExample) {
  const auto f = make_sampled_map({{0.0}, {1.0}}, {line({0, 100}), line({0.5, 100.2})}, 0.5);
  const Decomposition parts = decompose_map(f, 2, 0);
  EXPECT_EQ(parts.core, line({0}));
  EXPECT_EQ(parts.g.images[0], line({0}));
  EXPECT_EQ(parts.g.images[1], line({0.5}));
  EXPECT_EQ(parts.h.images[0], line({100}));
  EXPECT_EQ(parts.h.images[1], line({100.2}));
}

TEST(Decompose, ZeroDiameterDomain) {
  const auto f = make_sampled_map({{0.0, 0.0}}, {line({0, 10})}, 3.0);
  const Decomposition parts = decompose_map(f, 2, 0);
  EXPECT_EQ(parts.g.images[0], line({0}));
  EXPECT_EQ(parts.h.images[0], line({10}));
}

TEST(Decompose, RequiresLargeBaseDiameter) {
  const auto f = make_sampled_map({{0.0}, {1.0}}, {line({0, 1}), line({0, 1.2})}, 1.0);
  try {
    decompose_map(f, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
}

TEST(DecomposeProperty, GeneratedInstances) {
  SetGenerator gen(99);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 0;
    const SampledMap f = generated_instance(gen, n);
    if (f.max_cardinality() > n) continue;
    ASSERT_GT(f.images[0].diameter(), 3 * f.lipschitz * f.diameter * (n - 1.0));
    const Decomposition parts = decompose_map(f, n, 0);
    ++checked;
    for (std::size_t x = 0; x < f.size(); ++x) {
      EXPECT_EQ(set_union(parts.g.images[x], parts.h.images[x]), f.images[x]);
      EXPECT_LT(parts.g.images[x].size(), n);
      EXPECT_LT(parts.h.images[x].size(), n);
      for (std::size_t y = 0; y < f.size(); ++y) {
        const double dx = oracle_dist(f.domain[x], f.domain[y]);
        EXPECT_LE(oracle_hausdorff(parts.g.images[x], parts.g.images[y]),
                  f.lipschitz * dx * (1 + 1e-9) + 1e-12);
        EXPECT_LE(oracle_hausdorff(parts.h.images[x], parts.h.images[y]),
                  f.lipschitz * dx * (1 + 1e-9) + 1e-12);
      }
    }
    const PointSet rest = parts.h.images[0];
    EXPECT_GT(set_gap(parts.core, rest) - 2 * f.lipschitz * f.diameter,
              f.lipschitz * f.diameter);
  }
  EXPECT_GE(checked, 90);
}

TEST(RadialExtension, ConstantPair) {
  const SampledMap f = on_circle(128, 1.0, [](double) { return line({0, 1}); });
  const ExtensionResult r = radial_extension(f, 2, {});
  const std::size_t R = r.radial_steps, S = r.sphere_points;
  EXPECT_EQ(R, 64u);
  EXPECT_EQ(S, 128u);
  EXPECT_EQ(r.map.images[0], line({0}));
  // Ring 32 of 64 sits at r = 0.5.
  for (std::size_t j = 0; j < S; ++j) {
    EXPECT_EQ(r.map.images[1 + 31 * S + j], line({0, 0.5}));
    EXPECT_EQ(r.map.images[1 + (R - 1) * S + j], f.images[j]);
  }
  for (double c : r.sphere_constants) EXPECT_EQ(c, 0.0);
  EXPECT_NEAR(r.radial_constant, 1.0, 1e-12);
}

TEST(RadialExtension, ApexIsNearestPointToOrigin) {
  const SampledMap f = on_circle(64, 1.0, [](double) { return line({-3, 2}); });
  EXPECT_EQ(radial_extension(f, 2, {}).map.images[0], line({2}));
  const SampledMap g = on_circle(64, 1.0, [](double) { return line({0, 5}); });
  EXPECT_EQ(radial_extension(g, 2, {}).map.images[0], line({0}));
}

TEST(RadialExtension, RequiresSmallBaseDiameter) {
  const SampledMap f = on_circle(32, 0.01, [](double) { return line({0, 1}); });
  EXPECT_THROW(radial_extension(f, 2, {}), Error);
}

TEST(RadialExtension, SphereConstantsScaleWithRadius) {
  const SampledMap f = on_circle(128, 0.35, [](double t) {
    const double a = 0.2 * std::cos(t);
    return line({a, a + 0.5 + 0.1 * std::sin(t)});
  });
  const ExtensionResult r = radial_extension(f, 2, {});
  const double top = r.sphere_constants.back();
  EXPECT_LE(top, f.lipschitz * (1 + 1e-9));
  for (std::size_t i = 1; i <= r.radial_steps; ++i) {
    const double radius = static_cast<double>(i) / static_cast<double>(r.radial_steps);
    EXPECT_NEAR(r.sphere_constants[i - 1], radius * top, 1e-9 * (1 + top));
    EXPECT_LE(r.sphere_constants[i - 1], radius * f.lipschitz * (1 + 1e-9));
  }
  // Radial line bound 6 L (n-1) + L D, with D = 2 on the unit circle.
  EXPECT_LE(r.radial_constant, 6 * f.lipschitz + 2 * f.lipschitz);
  EXPECT_TRUE(std::isfinite(r.grid_constant));
}

TEST(BallExtension, SmallDiameterMatchesRadial) {
  const SampledMap f = on_circle(64, 0.35, [](double t) {
    return line({0.1 * std::sin(t), 0.3 + 0.2 * std::cos(t)});
  });
  const ExtensionResult a = ball_extension(f, 2, {});
  const ExtensionResult b = radial_extension(f, 2, {});
  EXPECT_FALSE(a.decomposed);
  ASSERT_EQ(a.map.images.size(), b.map.images.size());
  for (std::size_t i = 0; i < a.map.images.size(); ++i) EXPECT_EQ(a.map.images[i], b.map.images[i]);
  EXPECT_EQ(a.grid_constant, b.grid_constant);
}

TEST(BallExtension, SplitInstanceIsUnionOfHalves) {
  // The worked decomposition example carried over to the circle.
  const SampledMap f = on_circle(64, 0.5, [](double t) {
    const double s = 0.125 * (1 + std::cos(t));
    return line({s, 100 + 0.8 * s});
  });
  const ExtensionResult r = ball_extension(f, 2, {});
  EXPECT_TRUE(r.decomposed);
  const Decomposition parts = decompose_map(f, 2, 0);
  const ExtensionResult g = radial_extension(parts.g, 1, {});
  const ExtensionResult h = radial_extension(parts.h, 1, {});
  ASSERT_EQ(r.map.images.size(), g.map.images.size());
  for (std::size_t i = 0; i < r.map.images.size(); ++i) {
    // 2n - 2 = n when n = 2, so no retraction is applied.
    EXPECT_EQ(r.map.images[i], set_union(g.map.images[i], h.map.images[i]));
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    EXPECT_EQ(r.map.images[1 + (r.radial_steps - 1) * r.sphere_points + j], f.images[j]);
  }
}

TEST(BallExtension, ThreePointSplitRetractsUnion) {
  const SampledMap f = on_circle(64, 0.2, [](double t) {
    const double s = 0.05 * std::cos(t);
    return line({s, 0.5 + s, 50 + 0.1 * std::sin(t)});
  });
  const ExtensionResult r = ball_extension(f, 3, {});
  EXPECT_TRUE(r.decomposed);
  for (const PointSet& s : r.map.images) EXPECT_LE(s.size(), 3u);
  for (std::size_t j = 0; j < f.size(); ++j) {
    EXPECT_EQ(r.map.images[1 + (r.radial_steps - 1) * r.sphere_points + j], f.images[j]);
  }
}

TEST(BallExtension, RefinementIsStable) {
  auto f_at = [](std::size_t count) {
    return on_circle(count, 0.35, [](double t) {
      const double a = 0.2 * std::cos(t);
      return line({a, a + 0.5 + 0.1 * std::sin(t)});
    });
  };
  ExtensionOptions coarse;
  coarse.radial_steps = 32;
  ExtensionOptions fine;
  fine.radial_steps = 64;
  const double c1 = ball_extension(f_at(64), 2, coarse).grid_constant;
  const double c2 = ball_extension(f_at(128), 2, fine).grid_constant;
  EXPECT_LT(std::abs(c2 - c1) / c1, 0.1);
}

}  // namespace
}  // namespace symprod
