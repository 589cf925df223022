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

// The PDHG metric P_s = [I/s, Aᵀ; A, I/s], in which the iteration
// x⁺ = proj(x − s(c − Aᵀy)), y⁺ = y − s(A(2x⁺ − x) − b) is non-expansive.
// It is positive definite exactly when s‖A‖₂ < 1.

#ifndef PDHG_PS_METRIC_H_
#define PDHG_PS_METRIC_H_

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {

// √((‖x‖² + ‖y‖²)/s + 2yᵀAx). Small negative radicands from rounding are
// clamped to zero; a clearly negative radicand means P_s is indefinite and
// is reported as an error.
absl::StatusOr<double> PsNorm(const PrimalDualPoint& z, const SparseMatrix& a,
                              double step_size);

// Same quantity when Ax is already available.
absl::StatusOr<double> PsNormFromProduct(const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& y,
                                         const Eigen::VectorXd& ax,
                                         double step_size);

// P_s z.
PrimalDualPoint ApplyPs(const SparseMatrix& a, const PrimalDualPoint& z,
                        double step_size);

// Solves P_s w = g by conjugate gradients to ‖residual‖ ≤ rel_tol·‖g‖.
// Fails when a non-positive curvature direction is met or the iteration
// limit is reached.
absl::StatusOr<PrimalDualPoint> SolvePs(const SparseMatrix& a,
                                        const PrimalDualPoint& g,
                                        double step_size,
                                        double rel_tol = 1e-10,
                                        int max_iter = 10000);

// ‖g‖_{P_s⁻¹} = √(gᵀP_s⁻¹g).
absl::StatusOr<double> PsInverseNorm(const SparseMatrix& a,
                                     const PrimalDualPoint& g,
                                     double step_size);

}  // namespace pdhg

#endif  // PDHG_PS_METRIC_H_
