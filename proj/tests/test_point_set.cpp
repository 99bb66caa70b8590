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

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "core/point_set.hpp"
#include "support/test_support.hpp"

namespace symprod {
namespace {

using testing::oracle_hausdorff;
using testing::SetGenerator;

TEST(Canonicalize, RemovesDuplicates) {
  const std::vector<Vec> raw{{1}, {1}, {0}};
  const PointSet s = PointSet::canonicalize(raw, 1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.value(0), 0.0);
  EXPECT_EQ(s.value(1), 1.0);
}

TEST(Canonicalize, SingletonInPlane) {
  const std::vector<Vec> raw{{2, 3}};
  const PointSet s = PointSet::canonicalize(raw, 2);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.point(0)[0], 2.0);
  EXPECT_EQ(s.point(0)[1], 3.0);
}

TEST(Canonicalize, AlreadyCanonical) {
  EXPECT_EQ(PointSet::on_line({0, 0.5, 1}).coords(), (std::vector<double>{0, 0.5, 1}));
}

TEST(Canonicalize, OrderIndependentAndSignedZero) {
  EXPECT_EQ(PointSet::on_line({3, -0.0, 1}), PointSet::on_line({1, 0.0, 3}));
  EXPECT_FALSE(std::signbit(PointSet::on_line({-0.0}).value(0)));
}

TEST(Canonicalize, Errors) {
  const std::vector<Vec> empty;
  try {
    PointSet::canonicalize(empty, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
  const std::vector<Vec> nan{{std::numeric_limits<double>::quiet_NaN()}};
  try {
    PointSet::canonicalize(nan, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFiniteCoordinate);
  }
  const std::vector<Vec> ragged{{1, 2}, {3}};
  try {
    PointSet::canonicalize(ragged, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Hausdorff, Examples) {
  EXPECT_EQ(hausdorff_distance(PointSet::on_line({0}), PointSet::on_line({0})), 0.0);
  EXPECT_EQ(hausdorff_distance(PointSet::on_line({0, 1}), PointSet::on_line({0, 3})), 2.0);
  EXPECT_EQ(hausdorff_distance(PointSet::on_line({0}), PointSet::on_line({1, 2})), 2.0);
  EXPECT_EQ(oracle_hausdorff(testing::line_points({0, 1}), testing::line_points({0, 3})), 2.0);
}

TEST(Hausdorff, DimensionMismatch) {
  const std::vector<Vec> plane{{0, 0}};
  EXPECT_THROW(hausdorff_distance(PointSet::on_line({0}), PointSet::canonicalize(plane, 2)),
               Error);
}

TEST(ProductDistance, Examples) {
  EXPECT_EQ(product_distance(0.0, 0.0), 0.0);
  EXPECT_EQ(product_distance(3.0, 4.0), 5.0);
  EXPECT_EQ(product_distance(1.0, 0.0), 1.0);
  const std::vector<double> parts{1.0, 2.0, 2.0};
  EXPECT_DOUBLE_EQ(product_distance(parts), 3.0);
}

class HausdorffProperty : public ::testing::TestWithParam<std::size_t> {};

TEST_P(HausdorffProperty, MatchesOracle) {
  const std::size_t dim = GetParam();
  SetGenerator gen(11 + dim);
  for (int i = 0; i < 2000; ++i) {
    const PointSet a = gen.set(5, dim);
    const PointSet b = gen.coin() ? gen.perturb(a, 0.1) : gen.set(5, dim);
    EXPECT_NEAR(hausdorff_distance(a, b), oracle_hausdorff(a, b), 1e-12);
  }
}

TEST_P(HausdorffProperty, MetricAxioms) {
  const std::size_t dim = GetParam();
  SetGenerator gen(101 + dim);
  for (int i = 0; i < 2000; ++i) {
    const PointSet a = gen.set(5, dim);
    const PointSet b = gen.set(5, dim);
    const PointSet c = gen.coin() ? gen.perturb(a, 0.5) : gen.set(5, dim);
    const double ab = hausdorff_distance(a, b);
    EXPECT_EQ(ab, hausdorff_distance(b, a));
    const double bound = hausdorff_distance(a, c) + hausdorff_distance(c, b);
    EXPECT_LE(ab, bound * (1 + 1e-9) + 1e-300);
    EXPECT_EQ(hausdorff_distance(a, a), 0.0);
    EXPECT_EQ(ab == 0.0, a == b);
  }
}

TEST_P(HausdorffProperty, TranslationAndScaling) {
  const std::size_t dim = GetParam();
  SetGenerator gen(202 + dim);
  for (int i = 0; i < 2000; ++i) {
    const PointSet a = gen.set(4, dim);
    const PointSet b = gen.set(4, dim);
    Vec v(dim);
    for (double& x : v) x = gen.uniform(-5, 5);
    const double t = gen.uniform(-3, 3);
    const double d = hausdorff_distance(a, b);
    EXPECT_NEAR(hausdorff_distance(a.translated(v), b.translated(v)), d, 1e-12 * (1 + d) * 30);
    EXPECT_NEAR(hausdorff_distance(a.scaled(t), b.scaled(t)), std::abs(t) * d,
                1e-12 * (1 + std::abs(t) * d) * 30);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, HausdorffProperty, ::testing::Values(1u, 2u, 3u));

}  // namespace
}  // namespace symprod
