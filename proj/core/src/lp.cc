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
#include <utility>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "pdhg/ps_metric.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {
namespace {

bool AllFinite(const Eigen::VectorXd& v) { return v.allFinite(); }

Eigen::VectorXd PositivePart(const Eigen::VectorXd& v) {
  return v.cwiseMax(0.0);
}

// x_i ↦ (c − Aᵀy)_i residual entering the KKT and δ computations.
Eigen::VectorXd ReducedCosts(const SparseMatrix& a, const Eigen::VectorXd& c,
                             const Eigen::VectorXd& y) {
  Eigen::VectorXd aty;
  MultiplyTransposeInto(a, y, aty);
  return c - aty;
}

void ClassifyPrimal(const Eigen::VectorXd& x, const Eigen::VectorXd& rc,
                    double tol, double a_norm, Partition& partition) {
  for (int i = 0; i < x.size(); ++i) {
    if (rc[i] > tol * a_norm) {
      partition.nonbasic.push_back(i);
    } else if (x[i] > tol) {
      partition.basic_strict.push_back(i);
    } else {
      partition.basic_degenerate.push_back(i);
    }
  }
}

void UpdateMin(double value, DeltaTerm kind, int index, DeltaMetric& delta) {
  if (value < delta.value) {
    delta.value = value;
    delta.argmin_kind = kind;
    delta.argmin_index = index;
  }
}

void PrimalDeltaTerms(const Eigen::VectorXd& x, const Eigen::VectorXd& rc,
                      const Partition& partition, double a_norm,
                      DeltaMetric& delta) {
  for (int i : partition.nonbasic) {
    UpdateMin(rc[i] / a_norm, DeltaTerm::kReducedCost, i, delta);
  }
  for (int i : partition.basic_strict) {
    UpdateMin(x[i], DeltaTerm::kPrimalSlack, i, delta);
  }
}

}  // namespace

Eigen::VectorXd PrimalDualPoint::Stacked() const {
  Eigen::VectorXd z(x.size() + y.size());
  z << x, y;
  return z;
}

PrimalDualPoint PrimalDualPoint::FromStacked(const Eigen::VectorXd& z,
                                             int num_vars) {
  PrimalDualPoint p;
  p.x = z.head(num_vars);
  p.y = z.tail(z.size() - num_vars);
  return p;
}

PrimalDualPoint PrimalDualPoint::Zero(int num_vars, int num_rows) {
  return {Eigen::VectorXd::Zero(num_vars), Eigen::VectorXd::Zero(num_rows)};
}

double Norm(const PrimalDualPoint& z) {
  return std::sqrt(z.x.squaredNorm() + z.y.squaredNorm());
}

double Distance(const PrimalDualPoint& z1, const PrimalDualPoint& z2) {
  return std::sqrt((z1.x - z2.x).squaredNorm() + (z1.y - z2.y).squaredNorm());
}

absl::Status StandardLp::Validate() const {
  if (b.size() != a.rows() || c.size() != a.cols()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "inconsistent standard-form dimensions: A is ", a.rows(), "x",
        a.cols(), ", b has ", b.size(), ", c has ", c.size()));
  }
  if (!AllFinite(b) || !AllFinite(c)) {
    return absl::InvalidArgumentError("non-finite entries in b or c");
  }
  return absl::OkStatus();
}

SparseMatrix GeneralLp::CombinedMatrix() const {
  return *SparseMatrix::VStack(a_eq, a_ineq);
}

Eigen::VectorXd GeneralLp::CombinedRhs() const {
  Eigen::VectorXd rhs(num_rows());
  rhs << b_eq, b_ineq;
  return rhs;
}

absl::Status GeneralLp::Validate() const {
  if (a_eq.cols() != num_vars() || a_ineq.cols() != num_vars()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "constraint matrices have ", a_eq.cols(), " and ", a_ineq.cols(),
        " columns but c has ", num_vars(), " entries"));
  }
  if (b_eq.size() != a_eq.rows() || b_ineq.size() != a_ineq.rows()) {
    return absl::InvalidArgumentError(
        "right-hand side lengths do not match the constraint rows");
  }
  if (!AllFinite(b_eq) || !AllFinite(b_ineq) || !AllFinite(c) ||
      !std::isfinite(objective_offset)) {
    return absl::InvalidArgumentError("non-finite problem data");
  }
  return absl::OkStatus();
}

GeneralLp GeneralLp::FromStandard(const StandardLp& lp) {
  GeneralLp gl;
  gl.a_eq = lp.a;
  gl.b_eq = lp.b;
  gl.a_ineq = SparseMatrix::Zero(0, lp.num_vars());
  gl.b_ineq = Eigen::VectorXd(0);
  gl.c = lp.c;
  return gl;
}

double PrimalObjective(const GeneralLp& lp, const Eigen::VectorXd& x) {
  return lp.c.dot(x) + lp.objective_offset;
}

double DualObjective(const GeneralLp& lp, const Eigen::VectorXd& y) {
  return lp.CombinedRhs().dot(y) + lp.objective_offset;
}

PrimalDualPoint VariableMap::ToOriginal(
    const PrimalDualPoint& standard_point) const {
  return {standard_point.x.head(num_vars_), standard_point.y};
}

PrimalDualPoint VariableMap::ToStandard(
    const GeneralLp& lp, const PrimalDualPoint& original_point) const {
  Eigen::VectorXd ax;
  MultiplyInto(lp.a_ineq, original_point.x, ax);
  PrimalDualPoint out;
  out.x.resize(num_vars_ + num_ineq_);
  out.x << original_point.x, lp.b_ineq - ax;
  out.y = original_point.y;
  return out;
}

StandardForm ToStandardForm(const GeneralLp& lp) {
  const int n = lp.num_vars();
  const int m_i = lp.num_ineq();
  StandardForm out;
  std::vector<Triplet> triplets = lp.a_eq.ToTriplets();
  for (const Triplet& t : lp.a_ineq.ToTriplets()) {
    triplets.push_back({t.row + lp.num_eq(), t.col, t.value});
  }
  for (int j = 0; j < m_i; ++j) {
    triplets.push_back({lp.num_eq() + j, n + j, 1.0});
  }
  out.lp.a =
      *SparseMatrix::FromTriplets(lp.num_rows(), n + m_i, std::move(triplets));
  out.lp.b = lp.CombinedRhs();
  out.lp.c = Eigen::VectorXd::Zero(n + m_i);
  out.lp.c.head(n) = lp.c;
  out.map = VariableMap(n, lp.num_eq(), m_i);
  return out;
}

std::vector<int> Partition::Basic() const {
  std::vector<int> out = basic_strict;
  out.insert(out.end(), basic_degenerate.begin(), basic_degenerate.end());
  std::sort(out.begin(), out.end());
  return out;
}

Partition ComputePartition(const StandardLp& lp, const PrimalDualPoint& z,
                           double tol, double a_norm) {
  Partition partition;
  ClassifyPrimal(z.x, ReducedCosts(lp.a, lp.c, z.y), tol, a_norm, partition);
  return partition;
}

Partition ComputePartition(const GeneralLp& lp, const PrimalDualPoint& z,
                           double tol, double a_norm) {
  Partition partition;
  ClassifyPrimal(z.x, ReducedCosts(lp.CombinedMatrix(), lp.c, z.y), tol,
                 a_norm, partition);
  Eigen::VectorXd ax;
  MultiplyInto(lp.a_ineq, z.x, ax);
  const Eigen::VectorXd slack = lp.b_ineq - ax;
  for (int j = 0; j < lp.num_ineq(); ++j) {
    const double y_j = z.y[lp.num_eq() + j];
    if (slack[j] > tol * a_norm) {
      partition.dual_nonbasic.push_back(j);
    } else if (-y_j > tol) {
      partition.dual_basic_strict.push_back(j);
    } else {
      partition.dual_basic_degenerate.push_back(j);
    }
  }
  return partition;
}

const char* DeltaTermName(DeltaTerm term) {
  switch (term) {
    case DeltaTerm::kReducedCost:
      return "reduced_cost";
    case DeltaTerm::kPrimalSlack:
      return "primal_slack";
    case DeltaTerm::kDualSlackRow:
      return "dual_slack_row";
    case DeltaTerm::kDualValue:
      return "dual_value";
    case DeltaTerm::kNone:
      return "none";
  }
  return "none";
}

DeltaMetric ComputeDelta(const StandardLp& lp, const PrimalDualPoint& z,
                         const Partition& partition, double a_norm) {
  DeltaMetric delta;
  PrimalDeltaTerms(z.x, ReducedCosts(lp.a, lp.c, z.y), partition, a_norm,
                   delta);
  return delta;
}

DeltaMetric ComputeDelta(const GeneralLp& lp, const PrimalDualPoint& z,
                         const Partition& partition, double a_norm) {
  DeltaMetric delta;
  PrimalDeltaTerms(z.x, ReducedCosts(lp.CombinedMatrix(), lp.c, z.y),
                   partition, a_norm, delta);
  Eigen::VectorXd ax;
  MultiplyInto(lp.a_ineq, z.x, ax);
  for (int j : partition.dual_nonbasic) {
    UpdateMin((lp.b_ineq[j] - ax[j]) / a_norm, DeltaTerm::kDualSlackRow, j,
              delta);
  }
  for (int j : partition.dual_basic_strict) {
    UpdateMin(-z.y[lp.num_eq() + j], DeltaTerm::kDualValue, j, delta);
  }
  return delta;
}

double KktResidual(const GeneralLp& lp, const PrimalDualPoint& z) {
  Eigen::VectorXd ax_eq, ax_ineq, aty_eq, aty_ineq;
  MultiplyInto(lp.a_eq, z.x, ax_eq);
  MultiplyInto(lp.a_ineq, z.x, ax_ineq);
  const Eigen::VectorXd y_eq = z.y.head(lp.num_eq());
  const Eigen::VectorXd y_ineq = z.y.tail(lp.num_ineq());
  MultiplyTransposeInto(lp.a_eq, y_eq, aty_eq);
  MultiplyTransposeInto(lp.a_ineq, y_ineq, aty_ineq);
  const double gap =
      lp.c.dot(z.x) - lp.b_eq.dot(y_eq) - lp.b_ineq.dot(y_ineq);
  const double sq = (ax_eq - lp.b_eq).squaredNorm() +
                    PositivePart(ax_ineq - lp.b_ineq).squaredNorm() +
                    PositivePart(-z.x).squaredNorm() +
                    PositivePart(aty_eq + aty_ineq - lp.c).squaredNorm() +
                    PositivePart(y_ineq).squaredNorm() +
                    std::pow(std::max(gap, 0.0), 2);
  return std::sqrt(sq);
}

double KktResidual(const StandardLp& lp, const PrimalDualPoint& z) {
  Eigen::VectorXd ax, aty;
  MultiplyInto(lp.a, z.x, ax);
  MultiplyTransposeInto(lp.a, z.y, aty);
  const double gap = lp.c.dot(z.x) - lp.b.dot(z.y);
  const double sq = (ax - lp.b).squaredNorm() +
                    PositivePart(-z.x).squaredNorm() +
                    PositivePart(aty - lp.c).squaredNorm() +
                    std::pow(std::max(gap, 0.0), 2);
  return std::sqrt(sq);
}

absl::StatusOr<double> SubdifferentialDistance(const StandardLp& lp,
                                               const PrimalDualPoint& z,
                                               double step_size,
                                               SubdifferentialMetric metric,
                                               double a_norm) {
  if (z.x.size() != lp.num_vars() || z.y.size() != lp.num_rows()) {
    return absl::InvalidArgumentError("point dimensions do not match the LP");
  }
  Eigen::VectorXd ax;
  MultiplyInto(lp.a, z.x, ax);
  PrimalDualPoint g;
  g.x = ReducedCosts(lp.a, lp.c, z.y);
  for (int i = 0; i < g.x.size(); ++i) {
    if (z.x[i] <= 0.0) g.x[i] = std::min(g.x[i], 0.0);
  }
  g.y = lp.b - ax;
  if (metric == SubdifferentialMetric::kEuclidean) return Norm(g);
  g.y = -g.y;

  if (a_norm <= 0.0) {
    a_norm = EstimateSpectralNorm(lp.a, {.rel_tol = 1e-8}).safe_upper;
  }
  if (!(step_size > 0.0) || step_size * a_norm >= 1.0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "step size ", step_size, " is outside (0, 1/‖A‖₂) with ‖A‖₂ ≈ ",
        a_norm));
  }
  return PsInverseNorm(lp.a, g, step_size);
}

double IdentificationRadius(const PrimalDualPoint& z0,
                            const PrimalDualPoint& z_star) {
  return 2.0 * (Distance(z0, z_star) + Norm(z_star)) + 1.0;
}

}  // namespace pdhg
