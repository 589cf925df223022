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


#include "pdhg/instances.h"

#include <cmath>
#include <vector>

#include "Eigen/Core"
#include "gtest/gtest.h"
#include "pdhg/lp.h"
#include "pdhg/pdhg.h"
#include "test_util.h"

namespace pdhg {
namespace {

using ::pdhg::testing::Vec;

TEST(HouseLpTest, DataAndOptimum) {
  ASSERT_OK_AND_ASSIGN(GeneralLp lp, HouseLp(0.5, 0.1));
  ASSERT_OK(lp.Validate());
  EXPECT_EQ(lp.num_vars(), 6);
  EXPECT_EQ(lp.a_eq.rows(), 2);
  EXPECT_EQ(lp.a_ineq.rows(), 0);
  const Eigen::MatrixXd a = lp.a_eq.ToDense();
  EXPECT_EQ(a(1, 4), 2.0);
  EXPECT_EQ(a(1, 5), 2.0);
  EXPECT_NEAR(lp.c[3], 0.4, 1e-15);
  // x₄ = 1 (the cheap column) is feasible with objective κ − δ.
  const Eigen::VectorXd x = Vec({0, 0, 0, 1, 0, 0});
  EXPECT_LT((lp.a_eq.ToDense() * x - lp.b_eq).norm(), 1e-15);
  EXPECT_NEAR(PrimalObjective(lp, x), 0.4, 1e-15);
  SolverConfig config;
  config.kkt_tol = 1e-9;
  ASSERT_OK_AND_ASSIGN(SolveResult result, Solve(lp, config));
  ASSERT_EQ(result.status, SolveStatus::kOptimal);
  EXPECT_NEAR(PrimalObjective(lp, result.z_final.x), 0.5 - 0.1, 1e-7);
}

TEST(HouseLpTest, RejectsBadParameters) {
  EXPECT_FALSE(HouseLp(0.0, 0.0).ok());
  EXPECT_FALSE(HouseLp(1.0, 0.0).ok());
  EXPECT_FALSE(HouseLp(0.5, 0.6).ok());
  EXPECT_TRUE(HouseLp(0.5, 0.0).ok());
}

TEST(NonuniqueDualLpTest, Data) {
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(1e-3));
  const Eigen::MatrixXd a = lp.a.ToDense();
  EXPECT_TRUE(a.isApprox(testing::Dense({{0, -1, 1e-3}, {1, 0, -1}})));
  EXPECT_EQ(lp.b, Vec({0, 1}));
  EXPECT_EQ(lp.c, Vec({1, 0, 1e-3}));
  // x* = (1, 0, 0) with any y = (y₁, 1), 0 ≤ y₁ ≤ (1 + κ)/κ, is optimal.
  EXPECT_LT(KktResidual(lp, testing::Point(Vec({1, 0, 0}), Vec({1000, 1}))),
            1e-12);
  EXPECT_FALSE(NonuniqueDualLp(-1.0).ok());
}

TEST(PerturbTest, ZeroSigmaIsIdentity) {
  ASSERT_OK_AND_ASSIGN(GeneralLp lp, HouseLp(0.5, 0.1));
  ASSERT_OK_AND_ASSIGN(GeneralLp same, Perturb(lp, 0.0, 3));
  EXPECT_EQ(same.a_eq.ToDense(), lp.a_eq.ToDense());
  EXPECT_EQ(same.b_eq, lp.b_eq);
  EXPECT_EQ(same.c, lp.c);
}

TEST(PerturbTest, SeededAndSmall) {
  ASSERT_OK_AND_ASSIGN(GeneralLp lp, HouseLp(0.5, 0.1));
  ASSERT_OK_AND_ASSIGN(GeneralLp p1, Perturb(lp, 1e-6, 3));
  ASSERT_OK_AND_ASSIGN(GeneralLp p2, Perturb(lp, 1e-6, 3));
  ASSERT_OK_AND_ASSIGN(GeneralLp p3, Perturb(lp, 1e-6, 4));
  EXPECT_EQ(p1.a_eq.ToDense(), p2.a_eq.ToDense());
  EXPECT_EQ(p1.c, p2.c);
  EXPECT_EQ(p1.b_eq, p2.b_eq);
  EXPECT_NE(p1.c, p3.c);
  EXPECT_LE((p1.a_eq.ToDense() - lp.a_eq.ToDense()).cwiseAbs().maxCoeff(), 1e-5);
  EXPECT_LE((p1.c - lp.c).cwiseAbs().maxCoeff(), 1e-5);
  EXPECT_LE((p1.b_eq - lp.b_eq).cwiseAbs().maxCoeff(), 1e-5);
  EXPECT_NE(p1.c, lp.c);
  // The sparsity pattern is unchanged.
  EXPECT_EQ(p1.a_eq.nnz(), lp.a_eq.nnz());
  EXPECT_FALSE(Perturb(lp, -1.0, 0).ok());
}

TEST(RandomPlantedLpTest, PlantedPointIsOptimal) {
  for (uint64_t seed : {0u, 1u, 2u}) {
    ASSERT_OK_AND_ASSIGN(PlantedLp planted, RandomPlantedLp(20, 40, false, seed));
    ASSERT_OK(planted.lp.Validate());
    EXPECT_EQ(planted.basis.size(), 20u);
    EXPECT_LE(KktResidual(planted.lp, planted.optimum), 1e-12);
    const Partition part =
        ComputePartition(planted.lp, planted.optimum, 1e-9, 1.0);
    EXPECT_EQ(part.basic_strict, planted.basis);
    EXPECT_TRUE(part.basic_degenerate.empty());
  }
}

TEST(RandomPlantedLpTest, DegenerateHasB2) {
  ASSERT_OK_AND_ASSIGN(PlantedLp planted, RandomPlantedLp(20, 40, true, 0));
  EXPECT_LE(KktResidual(planted.lp, planted.optimum), 1e-12);
  const Partition part =
      ComputePartition(planted.lp, planted.optimum, 1e-9, 1.0);
  EXPECT_FALSE(part.basic_degenerate.empty());
}

TEST(RandomPlantedLpTest, OneByOne) {
  ASSERT_OK_AND_ASSIGN(PlantedLp planted, RandomPlantedLp(1, 1, false, 0));
  EXPECT_EQ(planted.lp.a.rows(), 1);
  EXPECT_EQ(planted.lp.a.cols(), 1);
  // min c·x s.t. a·x = b, x ≥ 0 has x* = b/a and y* = c/a.
  const double a = planted.lp.a.ToDense()(0, 0);
  EXPECT_NEAR(planted.optimum.x[0], planted.lp.b[0] / a, 1e-12);
  EXPECT_NEAR(planted.optimum.y[0], planted.lp.c[0] / a, 1e-12);
  EXPECT_FALSE(RandomPlantedLp(2, 1, false, 0).ok());
}

}  // namespace
}  // namespace pdhg
