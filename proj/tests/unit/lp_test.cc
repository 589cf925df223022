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


#include "pdhg/lp.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "Eigen/Dense"
#include "gtest/gtest.h"
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

StandardLp NonuniqueDual(double kappa) {
  return MakeStandardLp(Dense({{0, -1, kappa}, {1, 0, -1}}), Vec({0, 1}),
                        Vec({1, 0, kappa}));
}

// Second implementation of the general-form residual on dense data.
double DenseKkt(const Eigen::MatrixXd& a_eq, const Eigen::VectorXd& b_eq,
                const Eigen::MatrixXd& a_in, const Eigen::VectorXd& b_in,
                const Eigen::VectorXd& c, const Eigen::VectorXd& x,
                const Eigen::VectorXd& y) {
  const Eigen::VectorXd y_eq = y.head(a_eq.rows());
  const Eigen::VectorXd y_in = y.tail(a_in.rows());
  const Eigen::VectorXd aty = a_eq.transpose() * y_eq + a_in.transpose() * y_in;
  double sum = (a_eq * x - b_eq).squaredNorm();
  sum += (a_in * x - b_in).cwiseMax(0.0).squaredNorm();
  sum += (-x).cwiseMax(0.0).squaredNorm();
  sum += (aty - c).cwiseMax(0.0).squaredNorm();
  sum += y_in.cwiseMax(0.0).squaredNorm();
  const double gap = c.dot(x) - b_eq.dot(y_eq) - b_in.dot(y_in);
  sum += std::max(gap, 0.0) * std::max(gap, 0.0);
  return std::sqrt(sum);
}

TEST(KktResidualTest, ZeroAtNonuniqueDualOptimum) {
  const StandardLp lp = NonuniqueDual(1e-2);
  EXPECT_EQ(KktResidual(lp, Point(Vec({1, 0, 0}), Vec({4, 1}))), 0.0);
}

TEST(KktResidualTest, MatchesDenseReevaluation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::MatrixXd a_eq = RandomSparseDense(3, 6, 0.5, rng);
    const Eigen::MatrixXd a_in = RandomSparseDense(4, 6, 0.5, rng);
    GeneralLp lp{SparseMatrix::FromDense(a_eq), RandomVector(3, rng),
                 SparseMatrix::FromDense(a_in), RandomVector(4, rng),
                 RandomVector(6, rng)};
    const Eigen::VectorXd x = RandomVector(6, rng);
    const Eigen::VectorXd y = RandomVector(7, rng);
    const double expected =
        DenseKkt(a_eq, lp.b_eq, a_in, lp.b_ineq, lp.c, x, y);
    EXPECT_NEAR(KktResidual(lp, Point(x, y)), expected, 1e-12 * (1 + expected));
  }
}

TEST(KktResidualTest, LipschitzBound) {
  std::mt19937_64 rng(9);
  const Eigen::MatrixXd dense = RandomSparseDense(4, 7, 0.5, rng);
  const StandardLp lp =
      MakeStandardLp(dense, RandomVector(4, rng), RandomVector(7, rng));
  const double a_norm = EstimateSpectralNorm(lp.a, {.rel_tol = 1e-8}).safe_upper;
  Eigen::VectorXd cb(11);
  cb << lp.c, lp.b;
  const double constant = 1 + a_norm + cb.norm();
  for (int trial = 0; trial < 100; ++trial) {
    const PrimalDualPoint z = Point(RandomVector(7, rng), RandomVector(4, rng));
    const PrimalDualPoint w = Point(RandomVector(7, rng), RandomVector(4, rng));
    EXPECT_LE(std::abs(KktResidual(lp, z) - KktResidual(lp, w)),
              constant * Distance(z, w) + 1e-12);
  }
}

TEST(StandardFormTest, NoInequalitiesKeepsData) {
  const StandardLp lp = NonuniqueDual(0.5);
  const StandardForm sf = ToStandardForm(GeneralLp::FromStandard(lp));
  EXPECT_EQ(sf.lp.a, lp.a);
  EXPECT_EQ(sf.lp.b, lp.b);
  EXPECT_EQ(sf.lp.c, lp.c);
}

TEST(StandardFormTest, SingleInequalityGetsSlack) {
  GeneralLp gl;
  gl.a_eq = SparseMatrix::Zero(0, 1);
  gl.b_eq = Eigen::VectorXd(0);
  gl.a_ineq = SparseMatrix::FromDense(Dense({{1}}));
  gl.b_ineq = Vec({1});
  gl.c = Vec({2});
  const StandardForm sf = ToStandardForm(gl);
  EXPECT_EQ(sf.lp.a.ToDense(), Dense({{1, 1}}));
  EXPECT_EQ(sf.lp.b, Vec({1}));
  EXPECT_EQ(sf.lp.c, Vec({2, 0}));
}

TEST(StandardFormTest, MapRoundTrip) {
  std::mt19937_64 rng(13);
  GeneralLp gl{SparseMatrix::FromDense(RandomSparseDense(2, 5, 0.6, rng)),
               RandomVector(2, rng),
               SparseMatrix::FromDense(RandomSparseDense(3, 5, 0.6, rng)),
               RandomVector(3, rng), RandomVector(5, rng)};
  const StandardForm sf = ToStandardForm(gl);
  for (int trial = 0; trial < 20; ++trial) {
    const PrimalDualPoint z = Point(RandomVector(5, rng), RandomVector(5, rng));
    const PrimalDualPoint back = sf.map.ToOriginal(sf.map.ToStandard(gl, z));
    EXPECT_EQ(back.x, z.x);
    EXPECT_EQ(back.y, z.y);
    // Slacks make the inequality rows equalities.
    const PrimalDualPoint zs = sf.map.ToStandard(gl, z);
    const Eigen::VectorXd r = sf.lp.a.ToDense() * zs.x - sf.lp.b;
    EXPECT_LE(r.tail(3).norm(), 1e-12 * (1 + zs.x.norm()));
  }
}

TEST(PartitionTest, NonuniqueDualOptimum) {
  const StandardLp lp = NonuniqueDual(0.1);
  for (double y1 : {1.0, 4.0, 7.0}) {
    const Partition p =
        ComputePartition(lp, Point(Vec({1, 0, 0}), Vec({y1, 1})), 1e-6, 2.0);
    EXPECT_EQ(p.nonbasic, (std::vector<int>{1, 2}));
    EXPECT_EQ(p.basic_strict, (std::vector<int>{0}));
    EXPECT_TRUE(p.basic_degenerate.empty());
  }
}

TEST(PartitionTest, AllPositiveAllBasic) {
  const StandardLp lp = MakeStandardLp(Dense({{1, 1, 1}}), Vec({3}),
                                       Vec({0, 0, 0}));
  const Partition p =
      ComputePartition(lp, Point(Vec({1, 1, 1}), Vec({0})), 1e-6, 1.0);
  EXPECT_TRUE(p.nonbasic.empty());
  EXPECT_EQ(p.basic_strict, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(p.basic_degenerate.empty());
}

TEST(PartitionTest, DegenerateVertex) {
  // min −y₂ dual geometry reduced: x₂ = 0 with zero reduced cost.
  const StandardLp lp = MakeStandardLp(Dense({{1, 1}}), Vec({1}), Vec({1, 1}));
  const Partition p =
      ComputePartition(lp, Point(Vec({1, 0}), Vec({1})), 1e-6, 1.0);
  EXPECT_EQ(p.basic_strict, (std::vector<int>{0}));
  EXPECT_EQ(p.basic_degenerate, (std::vector<int>{1}));
}

TEST(PartitionTest, StableUnderToleranceChanges) {
  const StandardLp lp = NonuniqueDual(0.1);
  const PrimalDualPoint z = Point(Vec({1, 0, 0}), Vec({4, 1}));
  const Partition ref = ComputePartition(lp, z, 1e-6, 2.0);
  for (double tol : {5e-7, 2e-6, 1e-8, 1e-4}) {
    const Partition p = ComputePartition(lp, z, tol, 2.0);
    EXPECT_EQ(p.nonbasic, ref.nonbasic);
    EXPECT_EQ(p.basic_strict, ref.basic_strict);
  }
}

TEST(DeltaTest, SingleTerm) {
  const StandardLp lp = MakeStandardLp(Dense({{1}}), Vec({0.5}), Vec({0}));
  const PrimalDualPoint z = Point(Vec({0.5}), Vec({0}));
  const Partition p = ComputePartition(lp, z, 1e-6, 1.0);
  const DeltaMetric d = ComputeDelta(lp, z, p, 1.0);
  EXPECT_EQ(d.value, 0.5);
  EXPECT_EQ(d.argmin_kind, DeltaTerm::kPrimalSlack);
  EXPECT_EQ(std::string(DeltaTermName(d.argmin_kind)), "primal_slack");
  EXPECT_EQ(d.argmin_index, 0);
}

TEST(DeltaTest, ReducedCostTermScaledByNorm) {
  const StandardLp lp = NonuniqueDual(0.1);
  const PrimalDualPoint z = Point(Vec({1, 0, 0}), Vec({4, 1}));
  const Partition p = ComputePartition(lp, z, 1e-6, 2.0);
  const DeltaMetric d = ComputeDelta(lp, z, p, 2.0);
  // Reduced costs (0, 4, 0.1 − 0.4 + 1) / 2 and x₁ = 1.
  EXPECT_NEAR(d.value, 0.35, 1e-15);
  EXPECT_EQ(d.argmin_kind, DeltaTerm::kReducedCost);
  EXPECT_EQ(d.argmin_index, 2);
}

TEST(DeltaTest, EmptySetsGiveInfinity) {
  const StandardLp lp = MakeStandardLp(Dense({{1}}), Vec({0}), Vec({0}));
  const PrimalDualPoint z = Point(Vec({0}), Vec({0}));
  const Partition p = ComputePartition(lp, z, 1e-6, 1.0);
  const DeltaMetric d = ComputeDelta(lp, z, p, 1.0);
  EXPECT_TRUE(std::isinf(d.value));
  EXPECT_EQ(d.argmin_kind, DeltaTerm::kNone);
}

TEST(SubdifferentialTest, OneDimensionalHandCase) {
  const StandardLp lp = MakeStandardLp(Dense({{1}}), Vec({1}), Vec({1}));
  ASSERT_OK_AND_ASSIGN(
      double d, SubdifferentialDistance(lp, Point(Vec({2}), Vec({0})), 0.25,
                                        SubdifferentialMetric::kEuclidean));
  EXPECT_NEAR(d, std::sqrt(2.0), 1e-15);
}

TEST(SubdifferentialTest, NormalConeAbsorbsPositiveReducedCost) {
  // x = 0 with reduced cost 3, feasible dual part.
  const StandardLp lp = MakeStandardLp(Dense({{0}}), Vec({0}), Vec({3}));
  ASSERT_OK_AND_ASSIGN(
      double d, SubdifferentialDistance(lp, Point(Vec({0}), Vec({0})), 0.25,
                                        SubdifferentialMetric::kEuclidean, 1.0));
  EXPECT_EQ(d, 0.0);
}

TEST(SubdifferentialTest, ZeroAtOptimumAndPsInverseMatchesDense) {
  const StandardLp lp = NonuniqueDual(0.5);
  ASSERT_OK_AND_ASSIGN(
      double at_opt,
      SubdifferentialDistance(lp, Point(Vec({1, 0, 0}), Vec({1, 1})), 0.25,
                              SubdifferentialMetric::kPsInverse));
  EXPECT_LE(at_opt, 1e-12);

  // Dense P_s⁻¹ norm of the min-norm element at a generic point.
  const Eigen::MatrixXd a = lp.a.ToDense();
  const double s = 0.25;
  const Eigen::VectorXd x = Vec({0.5, 0, 2}), y = Vec({1, -1});
  Eigen::VectorXd rc = lp.c - a.transpose() * y;
  for (int i = 0; i < 3; ++i) {
    if (x[i] == 0.0) rc[i] = std::min(rc[i], 0.0);
  }
  Eigen::VectorXd g(5);
  g << rc, lp.b - a * x;
  Eigen::MatrixXd ps(5, 5);
  ps << Eigen::MatrixXd::Identity(3, 3) / s, -a.transpose(), -a,
      Eigen::MatrixXd::Identity(2, 2) / s;
  const double expected = std::sqrt(g.dot(ps.ldlt().solve(g)));
  ASSERT_OK_AND_ASSIGN(
      double got, SubdifferentialDistance(lp, Point(x, y), s,
                                          SubdifferentialMetric::kPsInverse));
  EXPECT_NEAR(got, expected, 1e-8 * expected);
  ASSERT_OK_AND_ASSIGN(
      double l2, SubdifferentialDistance(lp, Point(x, y), s,
                                         SubdifferentialMetric::kEuclidean));
  EXPECT_NEAR(l2, g.norm(), 1e-14);
}

TEST(SubdifferentialTest, RejectsStepTooLarge) {
  const StandardLp lp = MakeStandardLp(Dense({{1}}), Vec({1}), Vec({1}));
  EXPECT_FALSE(SubdifferentialDistance(lp, Point(Vec({2}), Vec({0})), 2.0,
                                       SubdifferentialMetric::kPsInverse)
                   .ok());
}

TEST(IdentificationRadiusTest, Values) {
  const PrimalDualPoint zero = Point(Vec({0, 0}), Vec({0}));
  EXPECT_EQ(IdentificationRadius(zero, zero), 1.0);
  const PrimalDualPoint z = Point(Vec({3, 0}), Vec({4}));
  // 2(5 + 5) + 1.
  EXPECT_DOUBLE_EQ(IdentificationRadius(zero, z), 21.0);
}

}  // namespace
}  // namespace pdhg
