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

// Small parametric LP families with known optimal structure.

#ifndef PDHG_INSTANCES_H_
#define PDHG_INSTANCES_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "pdhg/lp.h"

namespace pdhg {

// The LP whose dual is the two-dimensional "house" polytope
//
//   max y₂  s.t.  −1 ≤ y₁ ≤ 1,  −1 ≤ y₂ ≤ κ − δ,
//                 y₁ + y₂/κ ≤ 1,  −y₁ + y₂/κ ≤ 1.
//
// Each dual constraint is a primal column, so the primal is
//   min cᵀx  s.t. Ax = (0, 1), x ≥ 0
// with columns (−1,0), (1,0), (0,−1), (0,1), (1,1/κ), (−1,1/κ) and
// c = (1, 1, 1, κ−δ, 1, 1). The optimal value is κ − δ, attained by
// x = e₄ with y = (0, κ−δ). δ measures the gap between the top facet and
// the roof apex (0, κ); at δ = 0 three dual constraints meet at the optimum.
// Requires 0 < κ < 1 and 0 ≤ δ ≤ κ.
absl::StatusOr<GeneralLp> HouseLp(double kappa, double delta);

// min x₁ + κx₃  s.t.  −x₂ + κx₃ = 0,  x₁ − x₃ = 1,  x ≥ 0.
// The primal optimum x = (1, 0, 0) is unique and the dual optima form the
// segment {(y₁, 1) : 0 ≤ y₁ ≤ 1 + 1/κ}; the sharpness of its KKT system is
// at most κ. Requires κ > 0.
absl::StatusOr<StandardLp> NonuniqueDualLp(double kappa);

// Adds independent N(0, σ²) noise to every stored coefficient of A_E and
// A_I and to every entry of b_E, b_I and c. The sparsity pattern is kept.
absl::StatusOr<GeneralLp> Perturb(const GeneralLp& lp, double sigma,
                                  uint64_t seed);

struct PlantedLp {
  StandardLp lp;
  // Satisfies the optimality conditions exactly up to rounding in b and c.
  PrimalDualPoint optimum;
  // Columns of the planted basis, sorted.
  std::vector<int> basis;
};

// Random sparse A (m×n, full row rank) with a planted basis B. x*_B is
// uniform in [0.5, 2], y* is standard normal, b = Ax* and c = Aᵀy* + r with
// r_B = 0 and r uniform in [0.5, 2] off the basis. With `degenerate` one
// basic x* entry and one nonbasic r entry are set to zero.
absl::StatusOr<PlantedLp> RandomPlantedLp(int m, int n, bool degenerate,
                                          uint64_t seed);

}  // namespace pdhg

#endif  // PDHG_INSTANCES_H_
