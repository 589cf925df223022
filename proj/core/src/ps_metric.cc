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

#include "pdhg/ps_metric.h"

#include <algorithm>
#include <cmath>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {

absl::StatusOr<double> PsNormFromProduct(const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& y,
                                         const Eigen::VectorXd& ax,
                                         double step_size) {
  if (!(step_size > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("step size must be positive, got ", step_size));
  }
  const double diag = (x.squaredNorm() + y.squaredNorm()) / step_size;
  const double radicand = diag + 2.0 * y.dot(ax);
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -1e-12 * std::max(1.0, diag)) return 0.0;
  return absl::FailedPreconditionError(absl::StrCat(
      "P_s is not positive definite at step size ", step_size,
      " (radicand ", radicand, ")"));
}

absl::StatusOr<double> PsNorm(const PrimalDualPoint& z, const SparseMatrix& a,
                              double step_size) {
  if (z.x.size() != a.cols() || z.y.size() != a.rows()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "point of sizes (", z.x.size(), ", ", z.y.size(), ") for a ",
        a.rows(), "x", a.cols(), " matrix"));
  }
  Eigen::VectorXd ax;
  MultiplyInto(a, z.x, ax);
  return PsNormFromProduct(z.x, z.y, ax, step_size);
}

PrimalDualPoint ApplyPs(const SparseMatrix& a, const PrimalDualPoint& z,
                        double step_size) {
  PrimalDualPoint out;
  Eigen::VectorXd aty, ax;
  MultiplyTransposeInto(a, z.y, aty);
  MultiplyInto(a, z.x, ax);
  out.x = z.x / step_size + aty;
  out.y = z.y / step_size + ax;
  return out;
}

absl::StatusOr<PrimalDualPoint> SolvePs(const SparseMatrix& a,
                                        const PrimalDualPoint& g,
                                        double step_size, double rel_tol,
                                        int max_iter) {
  if (!(step_size > 0.0)) {
    return absl::InvalidArgumentError("step size must be positive");
  }
  const int n = a.cols();
  const Eigen::VectorXd rhs = g.Stacked();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(rhs.size());
  const double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) return PrimalDualPoint::FromStacked(w, n);
  Eigen::VectorXd r = rhs;
  Eigen::VectorXd p = r;
  double rr = r.squaredNorm();
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd q =
        ApplyPs(a, PrimalDualPoint::FromStacked(p, n), step_size).Stacked();
    const double curvature = p.dot(q);
    if (!(curvature > 0.0)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "P_s is not positive definite at step size ", step_size));
    }
    const double alpha = rr / curvature;
    w += alpha * p;
    r -= alpha * q;
    const double rr_next = r.squaredNorm();
    if (std::sqrt(rr_next) <= rel_tol * rhs_norm) {
      return PrimalDualPoint::FromStacked(w, n);
    }
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }
  return absl::DeadlineExceededError(
      absl::StrCat("P_s solve did not reach relative residual ", rel_tol,
                   " in ", max_iter, " iterations"));
}

absl::StatusOr<double> PsInverseNorm(const SparseMatrix& a,
                                     const PrimalDualPoint& g,
                                     double step_size) {
  absl::StatusOr<PrimalDualPoint> w = SolvePs(a, g, step_size);
  if (!w.ok()) return w.status();
  const double value = g.Stacked().dot(w->Stacked());
  return std::sqrt(std::max(0.0, value));
}

}  // namespace pdhg
