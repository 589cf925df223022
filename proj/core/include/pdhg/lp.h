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

// Linear programs in the two forms the solver works with:
//
//   standard form:  min cᵀx  s.t. Ax = b, x ≥ 0
//   general form:   min cᵀx  s.t. A_E x = b_E, A_I x ≤ b_I, x ≥ 0
//
// The saddle-point formulation of the general form is
//   min_{x ≥ 0} max_{y_I ≤ 0} cᵀx − yᵀAx + bᵀy,  A = [A_E; A_I],
// so dual values of inequality rows are nonpositive.

#ifndef PDHG_LP_H_
#define PDHG_LP_H_

#include <limits>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {

struct PrimalDualPoint {
  Eigen::VectorXd x;
  Eigen::VectorXd y;

  int primal_size() const { return static_cast<int>(x.size()); }
  int dual_size() const { return static_cast<int>(y.size()); }
  // Concatenation (x, y).
  Eigen::VectorXd Stacked() const;
  static PrimalDualPoint FromStacked(const Eigen::VectorXd& z, int num_vars);
  static PrimalDualPoint Zero(int num_vars, int num_rows);
};

// ‖(x, y)‖₂.
double Norm(const PrimalDualPoint& z);
// ‖z1 − z2‖₂. Sizes must agree.
double Distance(const PrimalDualPoint& z1, const PrimalDualPoint& z2);

struct StandardLp {
  SparseMatrix a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;

  int num_vars() const { return a.cols(); }
  int num_rows() const { return a.rows(); }
  absl::Status Validate() const;
};

struct GeneralLp {
  SparseMatrix a_eq;
  Eigen::VectorXd b_eq;
  SparseMatrix a_ineq;
  Eigen::VectorXd b_ineq;
  Eigen::VectorXd c;
  // Constant added to cᵀx when reporting objective values.
  double objective_offset = 0.0;

  int num_vars() const { return static_cast<int>(c.size()); }
  int num_eq() const { return a_eq.rows(); }
  int num_ineq() const { return a_ineq.rows(); }
  int num_rows() const { return num_eq() + num_ineq(); }

  // [A_E; A_I] and [b_E; b_I].
  SparseMatrix CombinedMatrix() const;
  Eigen::VectorXd CombinedRhs() const;

  absl::Status Validate() const;

  // The standard-form LP viewed as a general LP with equality rows only.
  static GeneralLp FromStandard(const StandardLp& lp);
};

// Objective cᵀx (+ offset for general LPs).
double PrimalObjective(const GeneralLp& lp, const Eigen::VectorXd& x);
// bᵀy (+ offset).
double DualObjective(const GeneralLp& lp, const Eigen::VectorXd& y);

// Maps between a general LP and its slack reformulation
//   min cᵀx s.t. A_E x = b_E, A_I x + s = b_I, x, s ≥ 0.
// Rows keep their order, so dual vectors coincide.
class VariableMap {
 public:
  VariableMap() = default;
  VariableMap(int num_vars, int num_eq, int num_ineq)
      : num_vars_(num_vars), num_eq_(num_eq), num_ineq_(num_ineq) {}

  int num_original_vars() const { return num_vars_; }
  int num_standard_vars() const { return num_vars_ + num_ineq_; }

  // Drops slack coordinates.
  PrimalDualPoint ToOriginal(const PrimalDualPoint& standard_point) const;
  // Appends slacks s = b_I − A_I x.
  PrimalDualPoint ToStandard(const GeneralLp& lp,
                             const PrimalDualPoint& original_point) const;

 private:
  int num_vars_ = 0;
  int num_eq_ = 0;
  int num_ineq_ = 0;
};

struct StandardForm {
  StandardLp lp;
  VariableMap map;
};

StandardForm ToStandardForm(const GeneralLp& lp);

// Index sets of a reference optimal solution (zero-based).
struct Partition {
  // c_i − A_iᵀy > tol·‖A‖₂.
  std::vector<int> nonbasic;
  // Remaining indices with x_i > tol.
  std::vector<int> basic_strict;
  // Remaining indices with x_i ≤ tol.
  std::vector<int> basic_degenerate;

  // Inequality-row sets of a general LP, indexed within A_I. A row is
  // "nonbasic" when its slack b_I − A_I x exceeds tol·‖A‖₂, strictly basic
  // when −y_I > tol, degenerate otherwise.
  std::vector<int> dual_nonbasic;
  std::vector<int> dual_basic_strict;
  std::vector<int> dual_basic_degenerate;

  // basic_strict ∪ basic_degenerate, sorted.
  std::vector<int> Basic() const;
};

Partition ComputePartition(const StandardLp& lp, const PrimalDualPoint& z,
                           double tol, double a_norm);
Partition ComputePartition(const GeneralLp& lp, const PrimalDualPoint& z,
                           double tol, double a_norm);

enum class DeltaTerm {
  kReducedCost,
  kPrimalSlack,
  kDualSlackRow,
  kDualValue,
  kNone,
};

const char* DeltaTermName(DeltaTerm term);

struct DeltaMetric {
  double value = std::numeric_limits<double>::infinity();
  DeltaTerm argmin_kind = DeltaTerm::kNone;
  int argmin_index = -1;
};

// min{ min_{i∈N} (c − Aᵀy)_i / ‖A‖₂, min_{i∈B1} x_i }.
DeltaMetric ComputeDelta(const StandardLp& lp, const PrimalDualPoint& z,
                         const Partition& partition, double a_norm);
// Additionally min over dual_nonbasic of (b_I − A_I x)_j / ‖A‖₂ and over
// dual_basic_strict of −y_j.
DeltaMetric ComputeDelta(const GeneralLp& lp, const PrimalDualPoint& z,
                         const Partition& partition, double a_norm);

// ‖(A_E x − b_E; [A_I x − b_I]⁺; [−x]⁺; [Aᵀy − c]⁺; [y_I]⁺; [cᵀx − bᵀy]⁺)‖₂.
// Offsets cancel in the gap and are ignored.
double KktResidual(const GeneralLp& lp, const PrimalDualPoint& z);
double KktResidual(const StandardLp& lp, const PrimalDualPoint& z);

enum class SubdifferentialMetric { kEuclidean, kPsInverse };

// Norm of the minimum-norm element g of
//   F(z) = (c − Aᵀy + ∂ι_{x≥0}(x); b − Ax),
// in ‖·‖₂ or ‖·‖_{P_s⁻¹}. The primal part keeps (c − Aᵀy)_i where x_i > 0 and
// min((c − Aᵀy)_i, 0) where x_i = 0. The P_s⁻¹ mode measures the dual part
// with the sign Ax − b that pairs with the metric in ps_metric.h (so that
// P_s(zᵏ − zᵏ⁺¹) ∈ F(zᵏ⁺¹) after the flip), solves P_s w = g by conjugate
// gradients and requires 0 < s < 1/‖A‖₂; pass a_norm ≤ 0 to estimate ‖A‖₂
// internally. Both modes evaluate the Euclidean min-norm selection, so the
// P_s⁻¹ value is an upper bound on dist_{P_s⁻¹}(0, F(z)).
absl::StatusOr<double> SubdifferentialDistance(const StandardLp& lp,
                                               const PrimalDualPoint& z,
                                               double step_size,
                                               SubdifferentialMetric metric,
                                               double a_norm = 0.0);

// R = 2(‖z0 − z*‖₂ + ‖z*‖₂) + 1.
double IdentificationRadius(const PrimalDualPoint& z0,
                            const PrimalDualPoint& z_star);

}  // namespace pdhg

#endif  // PDHG_LP_H_
