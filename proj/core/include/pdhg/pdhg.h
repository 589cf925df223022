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

// Primal-dual hybrid gradient for linear programs:
//
//   x⁺ = proj_{x≥0}(x − s(c − Aᵀy))
//   y⁺ = y − s(A(2x⁺ − x) − b),   y⁺_I ← min(y⁺_I, 0) for inequality rows.
//
// No restarts, no primal weight, constant step size.

#ifndef PDHG_PDHG_H_
#define PDHG_PDHG_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "pdhg/iterate_log.h"
#include "pdhg/lp.h"
#include "pdhg/scaling.h"

namespace pdhg {

struct SolverConfig {
  // Explicit step size in the working (scaled) coordinates. When unset,
  // s = step_scale / σ̂ with σ̂ the safe upper spectral-norm estimate of the
  // working matrix; step_scale 0.5 gives s ≤ 1/(2‖A‖₂).
  std::optional<double> step_size;
  double step_scale = 0.5;
  int64_t max_iters = 300000;
  double kkt_tol = 1e-8;
  // Records (and checks termination) every log_every iterations; the final
  // iterate is always recorded.
  int64_t log_every = 1;
  // Seeds the power iteration.
  uint64_t seed = 0;
  // Keep every logged iterate (original coordinates) in the log.
  bool record_iterates = false;
  bool precondition = true;
  int ruiz_iterations = 10;
  // Starting point in original coordinates; zero when unset.
  std::optional<PrimalDualPoint> initial_point;
  // Threshold for the x > tol and reduced-cost masks.
  double mask_tol = 1e-6;
  // Fill IterateRecord::dist_to_final (by replaying the run when iterates
  // are not recorded).
  bool fill_distance_to_final = true;
};

enum class SolveStatus { kOptimal, kIterationLimit, kNumericalError };

const char* SolveStatusName(SolveStatus status);

struct SolveResult {
  // Original coordinates.
  PrimalDualPoint z_final;
  SolveStatus status = SolveStatus::kIterationLimit;
  int64_t iterations = 0;
  double final_kkt = 0.0;
  // Step size and spectral norm of the working matrix.
  double step_size = 0.0;
  double working_a_norm = 0.0;
  // ‖A‖₂ estimate of the original matrix (used by the masks).
  double original_a_norm = 0.0;
  ScalingRecord scaling;
  IterateLog log;
};

absl::StatusOr<SolveResult> Solve(const GeneralLp& lp,
                                  const SolverConfig& config);
absl::StatusOr<SolveResult> Solve(const StandardLp& lp,
                                  const SolverConfig& config);

// One update of the iteration on the given data, without scaling.
absl::StatusOr<PrimalDualPoint> PdhgStep(const StandardLp& lp,
                                         const PrimalDualPoint& z,
                                         double step_size);
absl::StatusOr<PrimalDualPoint> PdhgStep(const GeneralLp& lp,
                                         const PrimalDualPoint& z,
                                         double step_size);

}  // namespace pdhg

#endif  // PDHG_PDHG_H_
