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

#include "pdhg/pdhg.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <utility>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "pdhg/iterate_log.h"
#include "pdhg/lp.h"
#include "pdhg/ps_metric.h"
#include "pdhg/scaling.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {
namespace {

// Data of the problem the iteration runs on.
struct WorkingData {
  SparseMatrix a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  int num_eq = 0;
};

WorkingData MakeWorkingData(const GeneralLp& lp) {
  return {lp.CombinedMatrix(), lp.CombinedRhs(), lp.c, lp.num_eq()};
}

// Computes z⁺ from z. `ax` and `aty` must hold Ax and Aᵀy.
void StepInto(const WorkingData& w, double s, const Eigen::VectorXd& x,
              const Eigen::VectorXd& y, const Eigen::VectorXd& ax,
              const Eigen::VectorXd& aty, Eigen::VectorXd& x_next,
              Eigen::VectorXd& y_next, Eigen::VectorXd& ax_next) {
  x_next = (x - s * (w.c - aty)).cwiseMax(0.0);
  MultiplyInto(w.a, x_next, ax_next);
  y_next = y - s * (2.0 * ax_next - ax - w.b);
  const int num_ineq = static_cast<int>(y.size()) - w.num_eq;
  y_next.tail(num_ineq) = y_next.tail(num_ineq).cwiseMin(0.0);
}

// State handed to observers at a logged iteration, in working coordinates.
struct LoggedState {
  int64_t iteration;
  double kkt;
  const Eigen::VectorXd& x;
  const Eigen::VectorXd& y;
  const Eigen::VectorXd& ax;
  const Eigen::VectorXd& aty;
  const Eigen::VectorXd& x_next;
  const Eigen::VectorXd& y_next;
  const Eigen::VectorXd& ax_next;
};

struct RunOutcome {
  SolveStatus status;
  int64_t iterations;
  double final_kkt;
  Eigen::VectorXd x;
  Eigen::VectorXd y;
};

class Runner {
 public:
  Runner(const GeneralLp& original, const WorkingData& working,
         const ScalingRecord& scaling, double step_size,
         const SolverConfig& config)
      : original_(original),
        working_(working),
        scaling_(scaling),
        step_size_(step_size),
        config_(config) {}

  // KKT residual of the original problem at the unscaled point, computed
  // from the working-coordinate products.
  double OriginalKkt(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                     const Eigen::VectorXd& ax,
                     const Eigen::VectorXd& aty) const {
    const Eigen::VectorXd& d1 = scaling_.row_scale;
    const Eigen::VectorXd& d2 = scaling_.col_scale;
    const int m_e = original_.num_eq();
    const int m_i = original_.num_ineq();
    const Eigen::VectorXd x_o = x.cwiseProduct(d2);
    const Eigen::VectorXd y_o = y.cwiseProduct(d1);
    const Eigen::VectorXd ax_o = ax.cwiseQuotient(d1);
    const Eigen::VectorXd aty_o = aty.cwiseQuotient(d2);
    const double gap = original_.c.dot(x_o) -
                       original_.b_eq.dot(y_o.head(m_e)) -
                       original_.b_ineq.dot(y_o.tail(m_i));
    const double sq =
        (ax_o.head(m_e) - original_.b_eq).squaredNorm() +
        (ax_o.tail(m_i) - original_.b_ineq).cwiseMax(0.0).squaredNorm() +
        (-x_o).cwiseMax(0.0).squaredNorm() +
        (aty_o - original_.c).cwiseMax(0.0).squaredNorm() +
        y_o.tail(m_i).cwiseMax(0.0).squaredNorm() +
        std::pow(std::max(gap, 0.0), 2);
    return std::sqrt(sq);
  }

  template <typename OnLog>
  RunOutcome Run(const PrimalDualPoint& start, OnLog&& on_log) const {
    Eigen::VectorXd x = start.x;
    Eigen::VectorXd y = start.y;
    Eigen::VectorXd ax, aty, x_next, y_next, ax_next;
    MultiplyInto(working_.a, x, ax);
    MultiplyTransposeInto(working_.a, y, aty);
    const int64_t log_every = config_.log_every;
    for (int64_t k = 0;; ++k) {
      StepInto(working_, step_size_, x, y, ax, aty, x_next, y_next, ax_next);
      const bool at_limit = k >= config_.max_iters;
      const bool finite = x_next.allFinite() && y_next.allFinite();
      const bool logged = at_limit || !finite || k % log_every == 0;
      if (logged) {
        const double kkt = OriginalKkt(x, y, ax, aty);
        on_log(LoggedState{k, kkt, x, y, ax, aty, x_next, y_next, ax_next});
        if (kkt <= config_.kkt_tol) {
          return {SolveStatus::kOptimal, k, kkt, x, y};
        }
        if (at_limit) return {SolveStatus::kIterationLimit, k, kkt, x, y};
        if (!finite) return {SolveStatus::kNumericalError, k, kkt, x, y};
      }
      std::swap(x, x_next);
      std::swap(y, y_next);
      std::swap(ax, ax_next);
      MultiplyTransposeInto(working_.a, y, aty);
    }
  }

 private:
  const GeneralLp& original_;
  const WorkingData& working_;
  const ScalingRecord& scaling_;
  double step_size_;
  const SolverConfig& config_;
};

absl::Status ValidateConfig(const SolverConfig& config) {
  if (config.step_size.has_value() && !(*config.step_size > 0.0)) {
    return absl::InvalidArgumentError("step_size must be positive");
  }
  if (!(config.step_scale > 0.0)) {
    return absl::InvalidArgumentError("step_scale must be positive");
  }
  if (!(config.kkt_tol > 0.0)) {
    return absl::InvalidArgumentError("kkt_tol must be positive");
  }
  if (config.log_every < 1) {
    return absl::InvalidArgumentError("log_every must be at least 1");
  }
  if (config.max_iters < 0) {
    return absl::InvalidArgumentError("max_iters must be nonnegative");
  }
  return absl::OkStatus();
}

absl::Status CheckPoint(const PrimalDualPoint& z, int num_vars, int num_rows) {
  if (z.x.size() != num_vars || z.y.size() != num_rows) {
    return absl::InvalidArgumentError(absl::StrCat(
        "point of sizes (", z.x.size(), ", ", z.y.size(), ") for a problem "
        "with ", num_vars, " variables and ", num_rows, " rows"));
  }
  if (!z.x.allFinite() || !z.y.allFinite()) {
    return absl::InvalidArgumentError("point has non-finite entries");
  }
  return absl::OkStatus();
}

}  // namespace

const char* SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kIterationLimit:
      return "iteration_limit";
    case SolveStatus::kNumericalError:
      return "numerical_error";
  }
  return "unknown";
}

absl::StatusOr<SolveResult> Solve(const GeneralLp& lp,
                                  const SolverConfig& config) {
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  PrimalDualPoint start = PrimalDualPoint::Zero(n, m);
  if (config.initial_point.has_value()) {
    if (absl::Status s = CheckPoint(*config.initial_point, n, m); !s.ok()) {
      return s;
    }
    start = *config.initial_point;
  }

  SolveResult result;
  GeneralLp scaled_lp;
  if (config.precondition) {
    PreconditionedLp pre = Precondition(lp, config.ruiz_iterations);
    scaled_lp = std::move(pre.lp);
    result.scaling = std::move(pre.scaling);
  } else {
    scaled_lp = lp;
    result.scaling = ScalingRecord::Identity(m, n);
  }
  const WorkingData working = MakeWorkingData(scaled_lp);
  const PowerIterationOptions power{.seed = config.seed};
  const SpectralNormEstimate working_norm =
      EstimateSpectralNorm(working.a, power);
  result.working_a_norm = working_norm.safe_upper;
  result.original_a_norm =
      EstimateSpectralNorm(lp.CombinedMatrix(), power).safe_upper;
  if (config.step_size.has_value()) {
    result.step_size = *config.step_size;
  } else if (working_norm.safe_upper > 0.0) {
    result.step_size = config.step_scale / working_norm.safe_upper;
  } else {
    result.step_size = config.step_scale;
  }

  const ScalingRecord& scaling = result.scaling;
  const PrimalDualPoint working_start = Scale(start, scaling);
  const Runner runner(lp, working, scaling, result.step_size, config);
  const double rc_threshold = config.mask_tol * result.original_a_norm;
  const auto clock_start = std::chrono::steady_clock::now();
  absl::Status log_status = absl::OkStatus();

  RunOutcome outcome = runner.Run(working_start, [&](const LoggedState& st) {
    IterateRecord record;
    record.iteration = st.iteration;
    record.kkt = st.kkt;
    const Eigen::VectorXd dx = st.x_next - st.x;
    const Eigen::VectorXd dy = st.y_next - st.y;
    const Eigen::VectorXd adx = st.ax_next - st.ax;
    absl::StatusOr<double> step_norm =
        PsNormFromProduct(dx, dy, adx, result.step_size);
    if (step_norm.ok()) {
      record.ps_step_norm = *step_norm;
    } else {
      record.ps_step_norm = std::nan("");
      if (log_status.ok()) log_status = step_norm.status();
    }
    const Eigen::VectorXd x_o = st.x.cwiseProduct(scaling.col_scale);
    const Eigen::VectorXd rc_o =
        (working.c - st.aty).cwiseQuotient(scaling.col_scale);
    record.primal_support = Bitmask(n);
    record.primal_above_tol = Bitmask(n);
    record.dual_slack_positive = Bitmask(n);
    for (int i = 0; i < n; ++i) {
      if (x_o[i] > 0.0) record.primal_support.Set(i);
      if (x_o[i] > config.mask_tol) record.primal_above_tol.Set(i);
      if (rc_o[i] > rc_threshold) record.dual_slack_positive.Set(i);
    }
    record.wall_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - clock_start)
                              .count();
    result.log.records.push_back(std::move(record));
    if (config.record_iterates) {
      result.log.iterates.push_back(
          {x_o, st.y.cwiseProduct(scaling.row_scale)});
    }
  });
  if (!log_status.ok()) return log_status;

  result.status = outcome.status;
  result.iterations = outcome.iterations;
  result.final_kkt = outcome.final_kkt;
  result.z_final = Unscale({outcome.x, outcome.y}, scaling);

  if (config.fill_distance_to_final) {
    std::vector<IterateRecord>& records = result.log.records;
    if (config.record_iterates) {
      for (size_t i = 0; i < records.size(); ++i) {
        records[i].dist_to_final =
            Distance(result.log.iterates[i], result.z_final);
      }
    } else {
      size_t index = 0;
      runner.Run(working_start, [&](const LoggedState& st) {
        if (index < records.size()) {
          records[index++].dist_to_final = Distance(
              Unscale({st.x, st.y}, scaling), result.z_final);
        }
      });
    }
  }
  return result;
}

absl::StatusOr<SolveResult> Solve(const StandardLp& lp,
                                  const SolverConfig& config) {
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  return Solve(GeneralLp::FromStandard(lp), config);
}

absl::StatusOr<PrimalDualPoint> PdhgStep(const GeneralLp& lp,
                                         const PrimalDualPoint& z,
                                         double step_size) {
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  if (absl::Status s = CheckPoint(z, lp.num_vars(), lp.num_rows()); !s.ok()) {
    return s;
  }
  if (!(step_size > 0.0)) {
    return absl::InvalidArgumentError("step size must be positive");
  }
  const WorkingData w = MakeWorkingData(lp);
  Eigen::VectorXd ax, aty;
  MultiplyInto(w.a, z.x, ax);
  MultiplyTransposeInto(w.a, z.y, aty);
  PrimalDualPoint next;
  Eigen::VectorXd ax_next;
  StepInto(w, step_size, z.x, z.y, ax, aty, next.x, next.y, ax_next);
  if (!next.x.allFinite() || !next.y.allFinite()) {
    return absl::InternalError("numerical_error: non-finite PDHG update");
  }
  return next;
}

absl::StatusOr<PrimalDualPoint> PdhgStep(const StandardLp& lp,
                                         const PrimalDualPoint& z,
                                         double step_size) {
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  return PdhgStep(GeneralLp::FromStandard(lp), z, step_size);
}

}  // namespace pdhg
