// Copyright 2026 The pdhg-lp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pdhg/scaling.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "Eigen/Core"
#include "gtest/gtest.h"
#include "pdhg/instances.h"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"
#include "test_util.h"

namespace pdhg {
namespace {

using ::pdhg::testing::Dense;
using ::pdhg::testing::Point;
using ::pdhg::testing::RandomSparseDense;
using ::pdhg::testing::RandomVector;
using ::pdhg::testing::Vec;

Eigen::MatrixXd ApplyDense(const Eigen::MatrixXd& a, const ScalingRecord& s) {
  return s.row_scale.asDiagonal() * a * s.col_scale.asDiagonal();
}

// Largest deviation of a nonzero row or column infinity norm from 1.
double InfNormDeviation(const Eigen::MatrixXd& a) {
  double worst = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    const double v = a.row(i).lpNorm<Eigen::Infinity>();
    if (v > 0) worst = std::max(worst, std::abs(v - 1.0));
  }
  for (int j = 0; j < a.cols(); ++j) {
    const double v = a.col(j).lpNorm<Eigen::Infinity>();
    if (v > 0) worst = std::max(worst, std::abs(v - 1.0));
  }
  return worst;
}

double RowRatio(const Eigen::MatrixXd& a) {
  const Eigen::VectorXd norms = a.rowwise().lpNorm<Eigen::Infinity>();
  return norms.maxCoeff() / norms.minCoeff();
}

TEST(RuizTest, BalancedMatrixIsFixedPoint) {
  const ScalingRecord s =
      RuizScale(SparseMatrix::FromDense(Dense({{1, -0.5}, {0.3, 1}})), 10);
  EXPECT_EQ(s.row_scale, Vec({1, 1}));
  EXPECT_EQ(s.col_scale, Vec({1, 1}));
}

TEST(RuizTest, ScalarOneIteration) {
  // Row and column are each divided by √4.
  const SparseMatrix a = SparseMatrix::FromDense(Dense({{4}}));
  const ScalingRecord s = RuizScale(a, 1);
  EXPECT_DOUBLE_EQ(s.row_scale[0], 0.5);
  EXPECT_DOUBLE_EQ(s.col_scale[0], 0.5);
  EXPECT_DOUBLE_EQ(ApplyDense(a.ToDense(), s)(0, 0), 1.0);
}

TEST(RuizTest, ConvergesOnRandomMatrix) {
  std::mt19937_64 rng(31);
  Eigen::MatrixXd dense = RandomSparseDense(20, 30, 0.3, rng);
  for (int i = 0; i < 20; ++i) dense(i, i) += 1.0;  // no empty rows
  for (int j = 20; j < 30; ++j) dense(j - 20, j) += 2.0;
  const SparseMatrix a = SparseMatrix::FromDense(dense);
  EXPECT_LE(InfNormDeviation(ApplyDense(dense, RuizScale(a, 20))), 1e-3);
  double previous = RowRatio(dense);
  for (int k = 1; k <= 10; ++k) {
    const double ratio = RowRatio(ApplyDense(dense, RuizScale(a, k)));
    EXPECT_LE(ratio, previous * (1 + 1e-12));
    previous = ratio;
  }
}

TEST(RuizTest, ZeroRowsAndColumnsKeepUnitScale) {
  const ScalingRecord s =
      RuizScale(SparseMatrix::FromDense(Dense({{0, 0}, {0, 9}})), 3);
  EXPECT_EQ(s.row_scale[0], 1.0);
  EXPECT_EQ(s.col_scale[0], 1.0);
  EXPECT_GT(s.row_scale[1], 0.0);
}

TEST(PockChambolleTest, HandValues) {
  const ScalingRecord perm =
      PockChambolleScale(SparseMatrix::FromDense(Dense({{0, 1}, {1, 0}})));
  EXPECT_EQ(perm.row_scale, Vec({1, 1}));
  EXPECT_EQ(perm.col_scale, Vec({1, 1}));
  const SparseMatrix three = SparseMatrix::FromDense(Dense({{3}}));
  const ScalingRecord s = PockChambolleScale(three);
  EXPECT_DOUBLE_EQ(s.row_scale[0], 1.0 / std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(s.col_scale[0], 1.0 / std::sqrt(3.0));
  EXPECT_NEAR(ApplyDense(three.ToDense(), s)(0, 0), 1.0, 1e-15);
  // Row norms √(1+4), column norms 1 and 2.
  const ScalingRecord t =
      PockChambolleScale(SparseMatrix::FromDense(Dense({{1, 2}})));
  EXPECT_DOUBLE_EQ(t.row_scale[0], 1.0 / std::sqrt(std::sqrt(5.0)));
  EXPECT_DOUBLE_EQ(t.col_scale[1], 1.0 / std::sqrt(2.0));
}

TEST(PreconditionTest, NonuniqueDualMatrixNormBand) {
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(1e-10));
  const PreconditionedLp pre = Precondition(GeneralLp::FromStandard(lp));
  const double norm =
      EstimateSpectralNorm(pre.lp.CombinedMatrix(), {.rel_tol = 1e-10}).value;
  EXPECT_GE(norm, 0.5);
  EXPECT_LE(norm, 2.0);
}

TEST(PreconditionTest, ScaledDataAndPointMaps) {
  std::mt19937_64 rng(37);
  GeneralLp lp{SparseMatrix::FromDense(RandomSparseDense(3, 6, 0.6, rng)),
               RandomVector(3, rng),
               SparseMatrix::FromDense(RandomSparseDense(2, 6, 0.6, rng)),
               RandomVector(2, rng), RandomVector(6, rng)};
  const PreconditionedLp pre = Precondition(lp);
  const Eigen::VectorXd& d1 = pre.scaling.row_scale;
  const Eigen::VectorXd& d2 = pre.scaling.col_scale;
  ASSERT_EQ(d1.size(), 5);
  ASSERT_EQ(d2.size(), 6);
  EXPECT_GT(d1.minCoeff(), 0.0);
  EXPECT_GT(d2.minCoeff(), 0.0);
  const Eigen::MatrixXd combined = lp.CombinedMatrix().ToDense();
  EXPECT_LE((pre.lp.CombinedMatrix().ToDense() -
             d1.asDiagonal() * combined * d2.asDiagonal())
                .norm(),
            1e-13);
  EXPECT_LE((pre.lp.CombinedRhs() - d1.cwiseProduct(lp.CombinedRhs())).norm(),
            1e-13);
  EXPECT_LE((pre.lp.c - d2.cwiseProduct(lp.c)).norm(), 1e-13);

  const PrimalDualPoint z = Point(RandomVector(6, rng), RandomVector(5, rng));
  const PrimalDualPoint back = Unscale(Scale(z, pre.scaling), pre.scaling);
  EXPECT_LE((back.x - z.x).norm(), 1e-13);
  EXPECT_LE((back.y - z.y).norm(), 1e-13);
  const PrimalDualPoint un = Unscale(z, pre.scaling);
  EXPECT_LE((un.x - d2.cwiseProduct(z.x)).norm(), 1e-13);
  EXPECT_LE((un.y - d1.cwiseProduct(z.y)).norm(), 1e-13);
}

TEST(PreconditionTest, BalancedInstanceIsUnchanged) {
  GeneralLp lp = GeneralLp::FromStandard(StandardLp{
      SparseMatrix::FromDense(Dense({{1, 0}, {0, 1}})), Vec({1, 2}),
      Vec({1, 1})});
  const PreconditionedLp pre = Precondition(lp);
  EXPECT_EQ(pre.scaling.row_scale, Vec({1, 1}));
  EXPECT_EQ(pre.scaling.col_scale, Vec({1, 1}));
}

TEST(PreconditionTest, ComposedWithMultiplies) {
  ScalingRecord a{Vec({2, 3}), Vec({5})};
  ScalingRecord b{Vec({0.5, 2}), Vec({0.1})};
  const ScalingRecord c = a.ComposedWith(b);
  EXPECT_EQ(c.row_scale, Vec({1, 6}));
  EXPECT_DOUBLE_EQ(c.col_scale[0], 0.5);
}

}  // namespace
}  // namespace pdhg
