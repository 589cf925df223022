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

// Polyhedra {x : Fx = g, F̃x ≤ g̃} and Euclidean projection onto them.

#ifndef PDHG_PROJECTION_H_
#define PDHG_PROJECTION_H_

#include <cstdint>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {

struct PolyhedralSystem {
  SparseMatrix eq_matrix;
  Eigen::VectorXd eq_rhs;
  SparseMatrix ineq_matrix;
  Eigen::VectorXd ineq_rhs;

  int num_vars() const { return eq_matrix.cols(); }
  int num_eq() const { return eq_matrix.rows(); }
  int num_ineq() const { return ineq_matrix.rows(); }

  absl::Status Validate() const;

  // ‖(Fp − g; [F̃p − g̃]⁺)‖₂.
  double Residual(const Eigen::VectorXd& p) const;

  // {Fx = 0, F̃x ≤ 0} with empty blocks allowed (pass 0-row matrices).
  static PolyhedralSystem Homogeneous(const SparseMatrix& eq,
                                      const SparseMatrix& ineq);
};

enum class ProjectionMethod {
  // Active-set when num_vars + rows ≤ ProjectionOptions::dense_limit,
  // Dykstra otherwise.
  kAuto,
  // Dual active-set QP (Goldfarb–Idnani with identity Hessian); exact up to
  // rounding, dense linear algebra.
  kActiveSet,
  // Dykstra's alternating projections over the affine set and each
  // halfspace, matvecs only.
  kDykstra,
};

struct ProjectionOptions {
  double tol = 1e-9;
  int64_t max_iter = 100000;
  ProjectionMethod method = ProjectionMethod::kAuto;
  int dense_limit = 400;
};

// Nearest point of the polyhedron to p. Errors: kFailedPrecondition when the
// system is infeasible (active-set certificate, or Dykstra stalling with a
// positive residual), kDeadlineExceeded on iteration limits.
absl::StatusOr<Eigen::VectorXd> ProjectOntoPolyhedron(
    const Eigen::VectorXd& p, const PolyhedralSystem& system,
    const ProjectionOptions& options = {});

absl::StatusOr<double> DistanceToPolyhedron(
    const Eigen::VectorXd& p, const PolyhedralSystem& system,
    const ProjectionOptions& options = {});

// True when the system has a solution (decided by the active-set method).
absl::StatusOr<bool> IsFeasible(const PolyhedralSystem& system);

}  // namespace pdhg

#endif  // PDHG_PROJECTION_H_
