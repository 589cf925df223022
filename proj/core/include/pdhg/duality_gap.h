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

#ifndef PDHG_DUALITY_GAP_H_
#define PDHG_DUALITY_GAP_H_

#include "absl/status/statusor.h"
#include "pdhg/lp.h"

namespace pdhg {

struct DualityGapResult {
  // ρ_r(z) = max { L(x, ŷ) − L(x̂, y) : ‖ẑ − z‖₂ ≤ r, x̂ ≥ 0 } / r
  // for L(x, y) = cᵀx − yᵀAx + bᵀy.
  double value = 0.0;
  // Maximizing displacement d = ẑ − z.
  PrimalDualPoint direction;
  // Whether the maximizer lies on the sphere ‖d‖₂ = r.
  bool ball_active = false;
};

// The objective is the linear function gᵀd with g = (Aᵀy − c, b − Ax), so
// the maximizer has the form d(μ) = max(μg, (−x, −∞)) for a ball multiplier
// μ ≥ 0. ‖d(μ)‖² is piecewise quadratic in μ with breakpoints x_i/|g_i|, and
// the multiplier is found exactly by sweeping the sorted breakpoints.
// Requires r > 0 and x ≥ 0.
absl::StatusOr<DualityGapResult> NormalizedDualityGapDetailed(
    const StandardLp& lp, const PrimalDualPoint& z, double r);

absl::StatusOr<double> NormalizedDualityGap(const StandardLp& lp,
                                            const PrimalDualPoint& z,
                                            double r);

}  // namespace pdhg

#endif  // PDHG_DUALITY_GAP_H_
