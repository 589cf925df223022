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

#include "pdhg/identification.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "pdhg/iterate_log.h"
#include "pdhg/lp.h"
#include "pdhg/lp_systems.h"
#include "pdhg/pdhg.h"
#include "pdhg/sharpness.h"

namespace pdhg {
namespace {

bool Positive(double v) { return v > 0.0 && !std::isnan(v); }

// True when the record shows the final active set.
bool Matches(const IterateRecord& record, const Partition& partition,
             const Bitmask& nonbasic) {
  for (int j : partition.nonbasic) {
    if (record.primal_support.Test(j)) return false;
  }
  for (int j : partition.basic_strict) {
    if (!record.primal_above_tol.Test(j)) return false;
  }
  return record.dual_slack_positive == nonbasic;
}

// Largest certified lower bound on α in the report, falling back to the
// uncertified combined estimate when nothing is certified.
std::pair<double, bool> BestAlpha(const HomogeneousSharpnessReport& report) {
  double best = -1.0;
  if (report.alpha_lower_certified) best = report.alpha_lower;
  if (report.brute_force.has_value()) best = std::max(best, *report.brute_force);
  if (best >= 0.0) return {best, true};
  return {report.alpha_lower, false};
}

}  // namespace

absl::StatusOr<std::optional<int64_t>> IdentificationMoment(
    const IterateLog& log, const Partition& final_partition) {
  if (log.empty()) return std::optional<int64_t>();
  if (!log.has_masks()) {
    return absl::FailedPreconditionError(
        "iterate log has no active-set masks; rerun with masks enabled");
  }
  const int n = log.records.front().primal_support.size();
  const size_t partition_size = final_partition.nonbasic.size() +
                                final_partition.basic_strict.size() +
                                final_partition.basic_degenerate.size();
  if (partition_size != static_cast<size_t>(n)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "partition covers ", partition_size, " variables, masks have ", n));
  }
  const Bitmask nonbasic = Bitmask::FromIndices(n, final_partition.nonbasic);
  std::optional<int64_t> moment;
  for (auto it = log.records.rbegin(); it != log.records.rend(); ++it) {
    if (!Matches(*it, final_partition, nonbasic)) break;
    moment = it->iteration;
  }
  return moment;
}

absl::StatusOr<double> IdentificationBound(double radius, double delta,
                                           double step_size, double alpha,
                                           double a_norm) {
  if (!Positive(radius) || !Positive(delta) || !Positive(step_size) ||
      !Positive(alpha) || !Positive(a_norm)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "identification bound needs positive inputs, got R=", radius,
        " delta=", delta, " s=", step_size, " alpha=", alpha,
        " norm=", a_norm));
  }
  const double factor =
      std::max(4.0, 1.0 / (step_size * step_size * alpha * alpha));
  return factor * 256.0 * radius * radius / (delta * delta) +
         2.0 / (step_size * a_norm);
}

absl::StatusOr<double> LocalRatePeriod(double step_size, double alpha) {
  if (!Positive(step_size) || !Positive(alpha)) {
    return absl::InvalidArgumentError("step size and alpha must be positive");
  }
  return 2.0 * std::ceil(4.0 * std::numbers::e /
                         (step_size * step_size * alpha * alpha));
}

absl::StatusOr<double> LocalRateBound(double delta, double step_size,
                                      double alpha, int64_t k_minus_k) {
  if (!Positive(delta)) {
    return absl::InvalidArgumentError("delta must be positive");
  }
  absl::StatusOr<double> period = LocalRatePeriod(step_size, alpha);
  if (!period.ok()) return period.status();
  return 4.0 * delta * std::exp(-static_cast<double>(k_minus_k) / *period);
}

absl::StatusOr<double> RDeltaMetric(const PrimalDualPoint& z0,
                                    const PrimalDualPoint& z_star,
                                    double delta) {
  if (!Positive(delta)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must be positive, got ", delta));
  }
  return IdentificationRadius(z0, z_star) / delta;
}

std::string FormatReport(const IdentificationReport& report) {
  std::string out;
  absl::StrAppend(&out, "empirical_iter: ",
                  report.empirical_iter.has_value()
                      ? absl::StrCat(*report.empirical_iter)
                      : std::string("none"),
                  "\n");
  absl::StrAppend(&out, "total_iterations: ", report.total_iterations, "\n");
  absl::StrAppend(&out,
                  absl::StrFormat("theoretical_K: %.10g\n", report.theoretical_k));
  absl::StrAppend(&out, absl::StrFormat("R: %.10g\n", report.radius));
  absl::StrAppend(&out, absl::StrFormat("delta: %.10g\n", report.delta.value));
  absl::StrAppend(&out, "delta_argmin: ",
                  DeltaTermName(report.delta.argmin_kind), " ",
                  report.delta.argmin_index, "\n");
  absl::StrAppend(&out, absl::StrFormat("alpha_L1_lower: %.10g certified: %s\n",
                                        report.alpha_l1_lower,
                                        report.alpha_l1_certified ? "true"
                                                                  : "false"));
  absl::StrAppend(&out, absl::StrFormat("alpha_L2_lower: %.10g certified: %s\n",
                                        report.alpha_l2_lower,
                                        report.alpha_l2_certified ? "true"
                                                                  : "false"));
  absl::StrAppend(&out, absl::StrFormat("local_rate_per_iter: %.10g\n",
                                        report.local_rate_per_iter));
  return out;
}

absl::StatusOr<TwoStageAnalysis> AnalyzeTwoStage(
    const GeneralLp& lp, const PrimalDualPoint& z0, const SolveResult& result,
    const TwoStageOptions& options) {
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  const PrimalDualPoint& z_star = result.z_final;
  TwoStageAnalysis out;
  out.a_norm = result.original_a_norm > 0.0
                   ? result.original_a_norm
                   : EstimateSpectralNorm(lp.CombinedMatrix(),
                                          {.rel_tol = 1e-8})
                         .value;
  out.partition =
      ComputePartition(lp, z_star, options.partition_tol, out.a_norm);

  IdentificationReport& report = out.report;
  report.total_iterations = result.iterations;
  report.radius = IdentificationRadius(z0, z_star);
  report.delta = ComputeDelta(lp, z_star, out.partition, out.a_norm);
  out.local_radius = report.delta.value + Norm(z_star);
  if (result.log.has_masks()) {
    absl::StatusOr<std::optional<int64_t>> moment =
        IdentificationMoment(result.log, out.partition);
    if (!moment.ok()) return moment.status();
    report.empirical_iter = *moment;
  }

  if (options.compute_sharpness) {
    const StandardForm standard = ToStandardForm(lp);
    const PrimalDualPoint z_std = standard.map.ToStandard(lp, z_star);
    const Partition std_partition = ComputePartition(
        standard.lp, z_std, options.partition_tol, out.a_norm);
    const int size = standard.lp.num_rows() * 2 + standard.lp.num_vars() * 2 +
                     1;
    if (size <= options.max_sharpness_size) {
      absl::StatusOr<PolyhedralSystem> active =
          BuildActiveConeSystem(standard.lp, std_partition, report.radius);
      if (!active.ok()) return active.status();
      absl::StatusOr<HomogeneousSharpnessReport> active_report =
          AnalyzeHomogeneousSystem(active->eq_matrix, active->ineq_matrix,
                                   options.sharpness);
      if (!active_report.ok()) return active_report.status();
      out.active_cone = *active_report;

      if (std::isfinite(out.local_radius) && out.local_radius > 0.0) {
        absl::StatusOr<PolyhedralSystem> local = BuildLocalConeSystem(
            standard.lp, std_partition, out.local_radius);
        if (!local.ok()) return local.status();
        absl::StatusOr<HomogeneousSharpnessReport> local_report =
            AnalyzeHomogeneousSystem(local->eq_matrix, local->ineq_matrix,
                                     options.sharpness);
        if (!local_report.ok()) return local_report.status();
        out.local_cone = *local_report;
      }
    }
  }
  if (out.active_cone.has_value()) {
    std::tie(report.alpha_l1_lower, report.alpha_l1_certified) =
        BestAlpha(*out.active_cone);
  }
  if (out.local_cone.has_value()) {
    std::tie(report.alpha_l2_lower, report.alpha_l2_certified) =
        BestAlpha(*out.local_cone);
  }

  report.theoretical_k = std::numeric_limits<double>::infinity();
  if (absl::StatusOr<double> k =
          IdentificationBound(report.radius, report.delta.value,
                              result.step_size, report.alpha_l1_lower,
                              out.a_norm);
      k.ok()) {
    report.theoretical_k = *k;
  }
  report.local_rate_per_iter = 1.0;
  if (absl::StatusOr<double> period =
          LocalRatePeriod(result.step_size, report.alpha_l2_lower);
      period.ok()) {
    report.local_rate_per_iter = std::exp(-1.0 / *period);
  }
  return out;
}

}  // namespace pdhg
