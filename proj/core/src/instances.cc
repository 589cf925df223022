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

#include "pdhg/instances.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "Eigen/Core"
#include "Eigen/LU"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {

absl::StatusOr<GeneralLp> HouseLp(double kappa, double delta) {
  if (!(kappa > 0.0 && kappa < 1.0) || !(delta >= 0.0 && delta <= kappa)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "house instance needs 0 < kappa < 1 and 0 <= delta <= kappa, got "
        "kappa=", kappa, " delta=", delta));
  }
  const double inv = 1.0 / kappa;
  Eigen::MatrixXd a(2, 6);
  a << -1.0, 1.0, 0.0, 0.0, 1.0, -1.0,  //
      0.0, 0.0, -1.0, 1.0, inv, inv;
  GeneralLp lp;
  lp.a_eq = SparseMatrix::FromDense(a);
  lp.b_eq = Eigen::Vector2d(0.0, 1.0);
  lp.a_ineq = SparseMatrix::Zero(0, 6);
  lp.b_ineq = Eigen::VectorXd(0);
  lp.c.resize(6);
  lp.c << 1.0, 1.0, 1.0, kappa - delta, 1.0, 1.0;
  return lp;
}

absl::StatusOr<StandardLp> NonuniqueDualLp(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    return absl::InvalidArgumentError(
        absl::StrCat("kappa must be positive, got ", kappa));
  }
  Eigen::MatrixXd a(2, 3);
  a << 0.0, -1.0, kappa,  //
      1.0, 0.0, -1.0;
  StandardLp lp;
  lp.a = SparseMatrix::FromDense(a);
  lp.b = Eigen::Vector2d(0.0, 1.0);
  lp.c = Eigen::Vector3d(1.0, 0.0, kappa);
  return lp;
}

absl::StatusOr<GeneralLp> Perturb(const GeneralLp& lp, double sigma,
                                  uint64_t seed) {
  if (!(sigma >= 0.0)) {
    return absl::InvalidArgumentError("sigma must be nonnegative");
  }
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  if (sigma == 0.0) return lp;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  auto perturb_values = [&](const SparseMatrix& m) {
    std::vector<double> values(m.values().begin(), m.values().end());
    for (double& v : values) v += noise(rng);
    return m.WithValues(values);
  };
  auto perturb_vector = [&](Eigen::VectorXd v) {
    for (int i = 0; i < v.size(); ++i) v[i] += noise(rng);
    return v;
  };
  GeneralLp out = lp;
  out.a_eq = perturb_values(lp.a_eq);
  out.a_ineq = perturb_values(lp.a_ineq);
  out.b_eq = perturb_vector(lp.b_eq);
  out.b_ineq = perturb_vector(lp.b_ineq);
  out.c = perturb_vector(lp.c);
  return out;
}

absl::StatusOr<PlantedLp> RandomPlantedLp(int m, int n, bool degenerate,
                                          uint64_t seed) {
  if (m < 1 || n < m) {
    return absl::InvalidArgumentError(
        absl::StrCat("need n >= m >= 1, got m=", m, " n=", n));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform01;
  std::uniform_real_distribution<double> positive(0.5, 2.0);
  const double density = std::min(1.0, 3.0 / m + 0.1);

  constexpr int kMaxAttempts = 20;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> basis(perm.begin(), perm.begin() + m);
    std::sort(basis.begin(), basis.end());

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (uniform01(rng) < density) a(i, j) = normal(rng);
      }
    }
    // Diagonal boost on the basis keeps A_B well conditioned.
    for (int k = 0; k < m; ++k) {
      double& entry = a(k, basis[k]);
      entry += entry >= 0.0 ? 3.0 : -3.0;
    }
    Eigen::MatrixXd a_basis(m, m);
    for (int k = 0; k < m; ++k) a_basis.col(k) = a.col(basis[k]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a_basis);
    if (lu.rank() < m || lu.rcond() < 1e-6) continue;

    PlantedLp out;
    out.basis = basis;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int j : basis) x[j] = positive(rng);
    Eigen::VectorXd y(m);
    for (int i = 0; i < m; ++i) y[i] = normal(rng);
    Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
    std::vector<bool> in_basis(n, false);
    for (int j : basis) in_basis[j] = true;
    int first_nonbasic = -1;
    for (int j = 0; j < n; ++j) {
      if (in_basis[j]) continue;
      r[j] = positive(rng);
      if (first_nonbasic < 0) first_nonbasic = j;
    }
    if (degenerate) {
      x[basis[0]] = 0.0;
      if (first_nonbasic >= 0) r[first_nonbasic] = 0.0;
    }
    out.lp.a = SparseMatrix::FromDense(a);
    out.lp.b = a * x;
    out.lp.c = a.transpose() * y + r;
    out.optimum = {x, y};
    return out;
  }
  return absl::InternalError(absl::StrCat(
      "could not draw a well-conditioned basis in ", kMaxAttempts,
      " attempts (m=", m, ", n=", n, ", seed=", seed, ")"));
}

}  // namespace pdhg
