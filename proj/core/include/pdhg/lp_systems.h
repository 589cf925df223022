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

// Linear inequality systems attached to a standard-form LP
// min cᵀx s.t. Ax = b, x ≥ 0 and a partition N ∪ B1 ∪ B2 of its columns.
// Variables are stacked as (primal block, dual block).

#ifndef PDHG_LP_SYSTEMS_H_
#define PDHG_LP_SYSTEMS_H_

#include "absl/status/statusor.h"
#include "pdhg/lp.h"
#include "pdhg/projection.h"

namespace pdhg {

// Optimality conditions in (x, y):
//   Ax = b,  Aᵀy ≤ c,  −x ≤ 0,  (1/R)(cᵀx − bᵀy) ≤ 0.
// The solution set is the primal-dual optimal set.
absl::StatusOr<PolyhedralSystem> BuildKktSystem(const StandardLp& lp,
                                                double radius);

// Optimality conditions once N is known to be zero, in (x, y):
//   A_Bᵀy ≤ c_B,  Ax = b,  −x_{N∪B2} ≤ 0,  (1/R)(cᵀx − bᵀy) ≤ 0.
// Its solution set equals z* + the cone of BuildActiveConeSystem.
absl::StatusOr<PolyhedralSystem> BuildActiveSolutionSystem(
    const StandardLp& lp, const Partition& partition, double radius);

// Homogeneous cone in (u, v):
//   Au = 0,  A_Bᵀv ≤ 0,  −u_{N∪B2} ≤ 0,  (1/R)(cᵀu − bᵀv) ≤ 0.
// Its sharpness governs the identification phase.
absl::StatusOr<PolyhedralSystem> BuildActiveConeSystem(
    const StandardLp& lp, const Partition& partition, double radius);

// Homogeneous cone restricted to the basic columns, in (u_B, v):
//   A_B u_B = 0,  A_Bᵀv ≤ 0,  −u_{B2} ≤ 0,  (1/R₂)(c_Bᵀu_B − bᵀv) ≤ 0.
// Its sharpness governs the local linear rate; R₂ = δ + ‖z*‖₂.
absl::StatusOr<PolyhedralSystem> BuildLocalConeSystem(
    const StandardLp& lp, const Partition& partition, double radius);

}  // namespace pdhg

#endif  // PDHG_LP_SYSTEMS_H_
