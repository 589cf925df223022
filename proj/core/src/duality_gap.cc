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

#include "pdhg/duality_gap.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {

absl::StatusOr<DualityGapResult> NormalizedDualityGapDetailed(
    const StandardLp& lp, const PrimalDualPoint& z, double r) {
  if (!(r > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("radius must be positive, got ", r));
  }
  const int n = lp.num_vars();
  if (z.x.size() != n || z.y.size() != lp.num_rows()) {
    return absl::InvalidArgumentError("point dimensions do not match the LP");
  }
  if ((z.x.array() < 0.0).any()) {
    return absl::InvalidArgumentError("primal point must be nonnegative");
  }
  Eigen::VectorXd ax, aty;
  MultiplyInto(lp.a, z.x, ax);
  MultiplyTransposeInto(lp.a, z.y, aty);
  Eigen::VectorXd g(n + lp.num_rows());
  g << aty - lp.c, lp.b - ax;

  // Coordinates that move with μ (slope² summed in `free_sq`) versus those
  // clamped at their lower bound (value² summed in `clamped_sq`).
  double free_sq = 0.0;
  int free_count = 0;
  double clamped_sq = 0.0;
  // (breakpoint μ_i, index) for x-coordinates that clamp at −x_i.
  std::vector<std::pair<double, int>> breakpoints;
  for (int i = 0; i < g.size(); ++i) {
    if (g[i] == 0.0) continue;
    if (i < n && g[i] < 0.0) {
      if (z.x[i] == 0.0) continue;
      breakpoints.emplace_back(z.x[i] / -g[i], i);
    }
    free_sq += g[i] * g[i];
    ++free_count;
  }
  std::sort(breakpoints.begin(), breakpoints.end());

  const double r_sq = r * r;
  double mu = -1.0;
  size_t next = 0;
  while (true) {
    // On the current interval ‖d(μ)‖² = μ²·free_sq + clamped_sq.
    const double end = next < breakpoints.size()
                           ? breakpoints[next].first
                           : std::numeric_limits<double>::infinity();
    if (free_sq > 0.0) {
      const double candidate = std::sqrt(std::max(0.0, r_sq - clamped_sq) /
                                         free_sq);
      if (candidate <= end) {
        mu = candidate;
        break;
      }
    }
    if (next == breakpoints.size()) break;
    // Clamp every coordinate sharing this breakpoint.
    const double at = breakpoints[next].first;
    while (next < breakpoints.size() && breakpoints[next].first == at) {
      const int i = breakpoints[next].second;
      free_sq -= g[i] * g[i];
      clamped_sq += z.x[i] * z.x[i];
      ++next;
      if (--free_count == 0) free_sq = 0.0;
    }
  }

  Eigen::VectorXd d(g.size());
  DualityGapResult result;
  if (mu >= 0.0) {
    result.ball_active = true;
    for (int i = 0; i < g.size(); ++i) {
      d[i] = i < n ? std::max(mu * g[i], -z.x[i]) : mu * g[i];
    }
  } else {
    // μ → ∞ stays inside the ball: every moving coordinate clamps.
    for (int i = 0; i < g.size(); ++i) {
      d[i] = (i < n && g[i] < 0.0) ? -z.x[i] : 0.0;
    }
    result.ball_active = false;
  }
  result.value = std::max(0.0, g.dot(d) / r);
  result.direction = PrimalDualPoint::FromStacked(d, n);
  return result;
}

absl::StatusOr<double> NormalizedDualityGap(const StandardLp& lp,
                                            const PrimalDualPoint& z,
                                            double r) {
  absl::StatusOr<DualityGapResult> detailed =
      NormalizedDualityGapDetailed(lp, z, r);
  if (!detailed.ok()) return detailed.status();
  return detailed->value;
}

}  // namespace pdhg
