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

// Diagonal preconditioning Ã = D1 A D2, b̃ = D1 b, c̃ = D2 c.
// Solutions map back by x = D2 x̃, y = D1 ỹ.

#ifndef PDHG_SCALING_H_
#define PDHG_SCALING_H_

#include "Eigen/Core"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {

struct ScalingRecord {
  Eigen::VectorXd row_scale;  // D1
  Eigen::VectorXd col_scale;  // D2

  static ScalingRecord Identity(int num_rows, int num_cols);
  // Scaling by `this` followed by `next`.
  ScalingRecord ComposedWith(const ScalingRecord& next) const;
};

// Ruiz equilibration in the infinity norm: every iteration divides each row
// and column by the square root of its current infinity norm, with both sets
// of norms taken from the same matrix. Zero rows and columns keep factor 1.
ScalingRecord RuizScale(const SparseMatrix& a, int iterations);

// D1_ii = 1/√‖row_i‖₂, D2_jj = 1/√‖col_j‖₂; zero rows and columns get 1.
ScalingRecord PockChambolleScale(const SparseMatrix& a);

struct PreconditionedLp {
  GeneralLp lp;
  ScalingRecord scaling;
};

// Ruiz (`ruiz_iterations` steps) followed by Pock–Chambolle on [A_E; A_I].
// Inequality rows stay inequalities because D1 > 0.
PreconditionedLp Precondition(const GeneralLp& lp, int ruiz_iterations = 10);

// Applies a given scaling to a general LP.
GeneralLp ApplyScaling(const GeneralLp& lp, const ScalingRecord& scaling);

PrimalDualPoint Unscale(const PrimalDualPoint& scaled,
                        const ScalingRecord& scaling);
// Inverse of Unscale: x̃ = x / D2, ỹ = y / D1.
PrimalDualPoint Scale(const PrimalDualPoint& original,
                      const ScalingRecord& scaling);

}  // namespace pdhg

#endif  // PDHG_SCALING_H_
