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


#include "pdhg/pdhg.h"

#include <cmath>
#include <random>
#include <string>

#include "Eigen/Core"
#include "gtest/gtest.h"
#include "pdhg/instances.h"
#include "pdhg/lp.h"
#include "pdhg/mps.h"
#include "pdhg/sparse_matrix.h"
#include "test_util.h"

namespace pdhg {
namespace {

using ::pdhg::testing::Dense;
using ::pdhg::testing::MakeStandardLp;
using ::pdhg::testing::Point;
using ::pdhg::testing::RandomSparseDense;
using ::pdhg::testing::RandomVector;
using ::pdhg::testing::Vec;

SolverConfig WithTol(double tol) {
  SolverConfig config;
  config.kkt_tol = tol;
  return config;
}

// The update written out on dense data.
PrimalDualPoint DenseStep(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                          const Eigen::VectorXd& c, const PrimalDualPoint& z,
                          double s, int num_ineq = 0) {
  const Eigen::VectorXd x =
      (z.x - s * (c - a.transpose() * z.y)).cwiseMax(0.0);
  Eigen::VectorXd y = z.y - s * (a * (2 * x - z.x) - b);
  for (int i = y.size() - num_ineq; i < y.size(); ++i) y[i] = std::min(y[i], 0.0);
  return Point(x, y);
}

TEST(PdhgStepTest, OneDimensionalHandIteration) {
  const StandardLp lp = MakeStandardLp(Dense({{1}}), Vec({1}), Vec({0}));
  ASSERT_OK_AND_ASSIGN(PrimalDualPoint z,
                       PdhgStep(lp, Point(Vec({0}), Vec({0})), 0.5));
  EXPECT_EQ(z.x, Vec({0}));
  EXPECT_EQ(z.y, Vec({0.5}));
}

TEST(PdhgStepTest, NonuniqueDualFirstSteps) {
  const double kappa = 0.5;
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(kappa));
  // From zero: x stays at max(0, −s·c) = 0 and y = s·b.
  ASSERT_OK_AND_ASSIGN(PrimalDualPoint z1,
                       PdhgStep(lp, PrimalDualPoint::Zero(3, 2), 0.25));
  EXPECT_EQ(z1.x, Vec({0, 0, 0}));
  EXPECT_EQ(z1.y, Vec({0, 0.25}));
  ASSERT_OK_AND_ASSIGN(PrimalDualPoint z2, PdhgStep(lp, z1, 0.25));
  const PrimalDualPoint expected =
      DenseStep(lp.a.ToDense(), lp.b, lp.c, z1, 0.25);
  EXPECT_LE((z2.Stacked() - expected.Stacked()).norm(), 1e-15);
}

TEST(PdhgStepTest, MatchesDenseUpdateOnRandomData) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXd a = RandomSparseDense(4, 7, 0.5, rng);
    const StandardLp lp =
        MakeStandardLp(a, RandomVector(4, rng), RandomVector(7, rng));
    const PrimalDualPoint z =
        Point(RandomVector(7, rng).cwiseAbs(), RandomVector(4, rng));
    ASSERT_OK_AND_ASSIGN(PrimalDualPoint got, PdhgStep(lp, z, 0.1));
    const PrimalDualPoint want = DenseStep(a, lp.b, lp.c, z, 0.1);
    EXPECT_LE((got.Stacked() - want.Stacked()).norm(), 1e-13);
  }
}

TEST(PdhgStepTest, GeneralFormProjectsInequalityDuals) {
  GeneralLp lp;
  lp.a_eq = SparseMatrix::Zero(0, 1);
  lp.b_eq = Eigen::VectorXd(0);
  lp.a_ineq = SparseMatrix::FromDense(Dense({{1}}));
  lp.b_ineq = Vec({1});
  lp.c = Vec({0});
  // x⁺ = 0.25; the unprojected dual 0.5 − 0.5·(0.5 − 1) = 0.75 is cut to 0.
  ASSERT_OK_AND_ASSIGN(PrimalDualPoint z,
                       PdhgStep(lp, Point(Vec({0}), Vec({0.5})), 0.5));
  EXPECT_DOUBLE_EQ(z.x[0], 0.25);
  EXPECT_EQ(z.y[0], 0.0);
}

TEST(PdhgStepTest, GeneralWithoutInequalitiesEqualsStandard) {
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(0.3));
  const PrimalDualPoint z = Point(Vec({0.2, 1, 0}), Vec({-1, 2}));
  ASSERT_OK_AND_ASSIGN(PrimalDualPoint a, PdhgStep(lp, z, 0.2));
  ASSERT_OK_AND_ASSIGN(PrimalDualPoint b,
                       PdhgStep(GeneralLp::FromStandard(lp), z, 0.2));
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
}

TEST(PdhgStepTest, OptimumIsFixedPoint) {
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(1e-2));
  const PrimalDualPoint z = Point(Vec({1, 0, 0}), Vec({4, 1}));
  ASSERT_OK_AND_ASSIGN(PrimalDualPoint next, PdhgStep(lp, z, 0.25));
  EXPECT_LE((next.Stacked() - z.Stacked()).norm(), 1e-15);
}

TEST(PdhgStepTest, RejectsBadInput) {
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(1e-2));
  EXPECT_FALSE(PdhgStep(lp, PrimalDualPoint::Zero(3, 2), 0.0).ok());
  EXPECT_FALSE(PdhgStep(lp, PrimalDualPoint::Zero(2, 2), 0.1).ok());
}

TEST(SolveTest, OneDimensionalConverges) {
  // min 2x s.t. x = 1: x* = 1, y* = c = 2.
  const StandardLp lp = MakeStandardLp(Dense({{1}}), Vec({1}), Vec({2}));
  ASSERT_OK_AND_ASSIGN(SolveResult r, Solve(lp, WithTol(1e-10)));
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.z_final.x[0], 1.0, 1e-9);
  EXPECT_NEAR(r.z_final.y[0], 2.0, 1e-9);
}

TEST(SolveTest, NonuniqueDualPrimalLimit) {
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(1e-2));
  ASSERT_OK_AND_ASSIGN(SolveResult r, Solve(lp, WithTol(1e-10)));
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_LE((r.z_final.x - Vec({1, 0, 0})).norm(), 1e-6);
  EXPECT_NEAR(r.z_final.y[1], 1.0, 1e-6);
  EXPECT_GE(r.z_final.y[0], -1e-6);
  EXPECT_LE(r.z_final.y[0], 1 + 1 / 1e-2 + 1e-6);
}

TEST(SolveTest, ZeroIterationsReturnsStart) {
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(1e-2));
  const PrimalDualPoint start = Point(Vec({1, 2, 3}), Vec({4, 5}));
  SolverConfig config;
  config.max_iters = 0;
  config.initial_point = start;
  ASSERT_OK_AND_ASSIGN(SolveResult r, Solve(lp, config));
  EXPECT_EQ(r.status, SolveStatus::kIterationLimit);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.z_final.x, start.x);
  EXPECT_EQ(r.z_final.y, start.y);
}

TEST(SolveTest, OptimalStatusImpliesTolerance) {
  ASSERT_OK_AND_ASSIGN(GeneralLp lp, HouseLp(0.5, 0.1));
  for (bool precondition : {true, false}) {
    SolverConfig config;
    config.kkt_tol = 1e-9;
    config.precondition = precondition;
    ASSERT_OK_AND_ASSIGN(SolveResult r, Solve(lp, config));
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_LE(KktResidual(lp, r.z_final), 1e-9);
    EXPECT_NEAR(PrimalObjective(lp, r.z_final.x), 0.4, 1e-7);
  }
}

TEST(SolveTest, PreconditionedMatchesUnpreconditionedObjective) {
  ASSERT_OK_AND_ASSIGN(GeneralLp lp, HouseLp(0.9, 0.01));
  SolverConfig config;
  config.kkt_tol = 1e-9;
  ASSERT_OK_AND_ASSIGN(SolveResult scaled, Solve(lp, config));
  config.precondition = false;
  ASSERT_OK_AND_ASSIGN(SolveResult plain, Solve(lp, config));
  EXPECT_NEAR(PrimalObjective(lp, scaled.z_final.x),
              PrimalObjective(lp, plain.z_final.x), 1e-7);
}

TEST(SolveTest, TransportFixture) {
  ASSERT_OK_AND_ASSIGN(
      MpsModel model,
      ReadMpsFile(std::string(PDHG_TEST_DATA_DIR) + "/transport.mps"));
  ASSERT_OK_AND_ASSIGN(SolveResult r, Solve(model.lp, WithTol(1e-9)));
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  // Optimal cost confirmed with an independent simplex solve.
  EXPECT_NEAR(PrimalObjective(model.lp, r.z_final.x), 400.0, 1e-5);
}

TEST(SolveTest, LogIsOrderedAndDeterministic) {
  ASSERT_OK_AND_ASSIGN(GeneralLp lp, HouseLp(0.5, 0.01));
  SolverConfig config;
  config.log_every = 7;
  ASSERT_OK_AND_ASSIGN(SolveResult a, Solve(lp, config));
  ASSERT_OK_AND_ASSIGN(SolveResult b, Solve(lp, config));
  ASSERT_EQ(a.log.size(), b.log.size());
  for (size_t k = 0; k < a.log.size(); ++k) {
    EXPECT_EQ(a.log.records[k].iteration, b.log.records[k].iteration);
    EXPECT_EQ(a.log.records[k].kkt, b.log.records[k].kkt);
    EXPECT_EQ(a.log.records[k].dist_to_final, b.log.records[k].dist_to_final);
    if (k > 0) {
      EXPECT_LT(a.log.records[k - 1].iteration, a.log.records[k].iteration);
    }
    EXPECT_TRUE(std::isfinite(a.log.records[k].kkt));
  }
  EXPECT_EQ(a.log.records.back().iteration, a.iterations);
  EXPECT_EQ(a.log.records.back().dist_to_final, 0.0);
  EXPECT_EQ(a.log.records.back().kkt, a.final_kkt);
}

TEST(SolveTest, RecordedIteratesMatchLog) {
  ASSERT_OK_AND_ASSIGN(StandardLp lp, NonuniqueDualLp(0.1));
  SolverConfig config;
  config.record_iterates = true;
  config.log_every = 5;
  config.precondition = false;
  ASSERT_OK_AND_ASSIGN(SolveResult r, Solve(lp, config));
  ASSERT_EQ(r.log.iterates.size(), r.log.records.size());
  for (size_t k = 0; k < r.log.size(); ++k) {
    EXPECT_NEAR(KktResidual(lp, r.log.iterates[k]), r.log.records[k].kkt,
                1e-12 * (1 + r.log.records[k].kkt));
  }
}

TEST(SolveTest, DefaultStepRespectsNormBound) {
  ASSERT_OK_AND_ASSIGN(GeneralLp lp, HouseLp(0.5, 0.1));
  SolverConfig config;
  config.precondition = false;
  config.max_iters = 1;
  ASSERT_OK_AND_ASSIGN(SolveResult r, Solve(lp, config));
  const double exact =
      EstimateSpectralNorm(lp.CombinedMatrix(), {.rel_tol = 1e-12}).value;
  EXPECT_LE(r.step_size, 1 / (2 * exact) * (1 + 1e-9));
}

}  // namespace
}  // namespace pdhg
