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

// Two-stage diagnostics of a PDHG run: when the active set settles, how that
// compares with the a-priori identification bound, and the local linear rate
// that follows.

#ifndef PDHG_IDENTIFICATION_H_
#define PDHG_IDENTIFICATION_H_

#include <cstdint>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "pdhg/iterate_log.h"
#include "pdhg/lp.h"
#include "pdhg/pdhg.h"
#include "pdhg/sharpness.h"

namespace pdhg {

// Earliest logged iteration k such that every record from k on has
// x_N = 0 exactly, x_{B1} above the mask tolerance and a positive reduced
// cost exactly on N. Scans backward from the last record. nullopt when the
// last record already fails; error when the log carries no masks or their
// size does not match the partition.
absl::StatusOr<std::optional<int64_t>> IdentificationMoment(
    const IterateLog& log, const Partition& final_partition);

// K = max{4, 1/(s²α²)}·256R²/δ² + 2/(s‖A‖₂). Errors unless every input is
// positive; δ = +∞ is accepted.
absl::StatusOr<double> IdentificationBound(double radius, double delta,
                                           double step_size, double alpha,
                                           double a_norm);

// Number of iterations t = 2⌈4e/(s²α²)⌉ over which the local distance bound
// shrinks by a factor e.
absl::StatusOr<double> LocalRatePeriod(double step_size, double alpha);

// 4δ·exp(−(k − K)/(2⌈4e/(s²α²)⌉)).
absl::StatusOr<double> LocalRateBound(double delta, double step_size,
                                      double alpha, int64_t k_minus_k);

// (2‖z0 − z*‖₂ + 2‖z*‖₂ + 1)/δ. Errors when δ ≤ 0.
absl::StatusOr<double> RDeltaMetric(const PrimalDualPoint& z0,
                                    const PrimalDualPoint& z_star,
                                    double delta);

struct IdentificationReport {
  std::optional<int64_t> empirical_iter;
  int64_t total_iterations = 0;
  double theoretical_k = 0.0;
  double radius = 0.0;
  DeltaMetric delta;
  double alpha_l1_lower = 0.0;
  bool alpha_l1_certified = false;
  double alpha_l2_lower = 0.0;
  bool alpha_l2_certified = false;
  // exp(−1/(2⌈4e/(s²α_{L2}²)⌉)).
  double local_rate_per_iter = 0.0;
};

// `key: value` lines: empirical_iter, theoretical_K, R, delta,
// alpha_L1_lower, alpha_L2_lower, local_rate_per_iter.
std::string FormatReport(const IdentificationReport& report);

struct TwoStageOptions {
  // Classification tolerance; should match SolverConfig::mask_tol.
  double partition_tol = 1e-6;
  bool compute_sharpness = true;
  // Sharpness reports are skipped for systems with more rows + columns.
  int max_sharpness_size = 60;
  HomogeneousAnalysisOptions sharpness = {.partition = {},
                                         .alpha0 = {},
                                         .angle_samples = 200,
                                         .seed = 0,
                                         .brute_force_limit = 16};
};

struct TwoStageAnalysis {
  // Partition of the original (general-form) problem.
  Partition partition;
  double a_norm = 0.0;
  // R₂ = δ + ‖z*‖₂.
  double local_radius = 0.0;
  // Reports on the active cone and the local cone of the standard form.
  std::optional<HomogeneousSharpnessReport> active_cone;
  std::optional<HomogeneousSharpnessReport> local_cone;
  IdentificationReport report;
};

// Post-processes a finished solve started from z0. The sharpness systems are
// built on the standard form of lp; when they are too large or the analysis
// is disabled, the α fields of the report are zero and uncertified.
absl::StatusOr<TwoStageAnalysis> AnalyzeTwoStage(
    const GeneralLp& lp, const PrimalDualPoint& z0, const SolveResult& result,
    const TwoStageOptions& options = {});

}  // namespace pdhg

#endif  // PDHG_IDENTIFICATION_H_
