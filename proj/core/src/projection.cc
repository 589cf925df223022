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

#include "pdhg/projection.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "Eigen/Core"
#include "Eigen/QR"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dual active-set method for min ½‖x − p‖² s.t. a_iᵀx ≥ b_i (inequalities)
// and a_iᵀx = b_i (equalities). Starts from the unconstrained minimizer p
// and adds one violated constraint at a time, dropping constraints whose
// multipliers would turn negative.
class ActiveSetProjector {
 public:
  explicit ActiveSetProjector(const PolyhedralSystem& system) {
    const int n = system.num_vars();
    const int m_e = system.num_eq();
    const int m_i = system.num_ineq();
    normals_.resize(m_e + m_i, n);
    normals_.topRows(m_e) = system.eq_matrix.ToDense();
    normals_.bottomRows(m_i) = -system.ineq_matrix.ToDense();
    rhs_.resize(m_e + m_i);
    rhs_ << system.eq_rhs, -system.ineq_rhs;
    is_eq_.assign(m_e + m_i, false);
    for (int i = 0; i < m_e; ++i) is_eq_[i] = true;
    row_norms_ = normals_.rowwise().norm();
  }

  absl::StatusOr<Eigen::VectorXd> Project(const Eigen::VectorXd& p,
                                          int64_t max_steps) const {
    const int n = static_cast<int>(p.size());
    const int num_constraints = static_cast<int>(rhs_.size());
    Eigen::VectorXd x = p;
    std::vector<Active> active;
    std::vector<double> u;
    std::vector<bool> is_active(num_constraints, false);
    // Constraints dependent on the active set whose violation is at the
    // rounding level of the path taken; treated as satisfied.
    std::vector<bool> is_skipped(num_constraints, false);
    const double p_norm = p.norm();
    int64_t steps = 0;

    while (true) {
      // Most violated constraint, equalities first.
      int chosen = -1;
      double chosen_violation = 0.0;
      double chosen_sign = 1.0;
      const double x_norm = x.norm();
      for (int pass = 0; pass < 2 && chosen < 0; ++pass) {
        const bool want_eq = pass == 0;
        for (int i = 0; i < num_constraints; ++i) {
          if (is_active[i] || is_skipped[i] || is_eq_[i] != want_eq) continue;
          const double slack = normals_.row(i).dot(x) - rhs_[i];
          const double violation = want_eq ? std::abs(slack) : -slack;
          const double threshold =
              kFeasTol *
              std::max({1.0, std::abs(rhs_[i]), row_norms_[i] * x_norm});
          if (violation > threshold && violation > chosen_violation) {
            chosen = i;
            chosen_violation = violation;
            chosen_sign = (want_eq && slack > 0.0) ? -1.0 : 1.0;
          }
        }
      }
      if (chosen < 0) {
        for (int i = 0; i < num_constraints; ++i) {
          if (!is_skipped[i]) continue;
          const double slack = normals_.row(i).dot(x) - rhs_[i];
          const double violation = is_eq_[i] ? std::abs(slack) : -slack;
          const double scale =
              std::max({1.0, std::abs(rhs_[i]),
                        row_norms_[i] * std::max(x.norm(), p_norm)});
          if (violation > kRoundingTol * scale) {
            return absl::FailedPreconditionError(
                "active-set projection lost accuracy on dependent "
                "constraints");
          }
        }
        return x;
      }

      const Eigen::VectorXd np = chosen_sign * normals_.row(chosen).transpose();
      const double bp = chosen_sign * rhs_[chosen];
      double u_new = 0.0;
      while (true) {
        if (++steps > max_steps) {
          return absl::DeadlineExceededError(absl::StrCat(
              "active-set projection exceeded ", max_steps, " steps"));
        }
        const int q = static_cast<int>(active.size());
        Eigen::VectorXd r = Eigen::VectorXd::Zero(q);
        Eigen::VectorXd z = np;
        if (q > 0) {
          Eigen::MatrixXd basis(n, q);
          for (int k = 0; k < q; ++k) {
            basis.col(k) =
                active[k].sign * normals_.row(active[k].index).transpose();
          }
          r = basis.householderQr().solve(np);
          z = np - basis * r;
        }
        double t1 = kInf;
        int drop = -1;
        for (int k = 0; k < q; ++k) {
          if (is_eq_[active[k].index] || r[k] <= 0.0) continue;
          const double ratio = u[k] / r[k];
          if (ratio < t1) {
            t1 = ratio;
            drop = k;
          }
        }
        double t2 = kInf;
        const double z_norm = z.norm();
        if (z_norm > kDependenceTol * np.norm()) {
          t2 = (bp - np.dot(x)) / z.dot(np);
        }
        if (t1 == kInf && t2 == kInf) {
          const double violation = bp - np.dot(x);
          const double scale =
              std::max({1.0, std::abs(bp),
                        np.norm() * std::max(x.norm(), p_norm)});
          if (violation > kRoundingTol * scale) {
            return absl::FailedPreconditionError(
                "polyhedron is empty (active-set infeasibility certificate)");
          }
          is_skipped[chosen] = true;
          break;
        }
        const double t = std::min(t1, t2);
        if (t2 != kInf) x += t * z;
        for (int k = 0; k < q; ++k) u[k] -= t * r[k];
        u_new += t;
        if (t2 <= t1) {
          active.push_back({chosen, chosen_sign});
          u.push_back(u_new);
          is_active[chosen] = true;
          break;
        }
        is_active[active[drop].index] = false;
        active.erase(active.begin() + drop);
        u.erase(u.begin() + drop);
      }
    }
  }

 private:
  struct Active {
    int index;
    double sign;
  };
  static constexpr double kFeasTol = 1e-12;
  static constexpr double kDependenceTol = 1e-12;
  static constexpr double kRoundingTol = 1e-9;

  Eigen::MatrixXd normals_;
  Eigen::VectorXd rhs_;
  Eigen::VectorXd row_norms_;
  std::vector<bool> is_eq_;
};

// Projects v onto {Fx = g} by v − Fᵀw with FFᵀw = Fv − g solved by CG.
absl::Status ProjectAffine(const PolyhedralSystem& system,
                           Eigen::VectorXd& v, double tol) {
  const SparseMatrix& f = system.eq_matrix;
  Eigen::VectorXd fv;
  MultiplyInto(f, v, fv);
  const Eigen::VectorXd rhs = fv - system.eq_rhs;
  const double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) return absl::OkStatus();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(f.rows());
  Eigen::VectorXd r = rhs;
  Eigen::VectorXd d = r;
  Eigen::VectorXd ftd, ffd;
  double rr = r.squaredNorm();
  const int max_iter = 10 * f.rows() + 100;
  for (int it = 0; it < max_iter && std::sqrt(rr) > tol * 1e-3 * rhs_norm;
       ++it) {
    MultiplyTransposeInto(f, d, ftd);
    MultiplyInto(f, ftd, ffd);
    const double curvature = d.dot(ffd);
    if (curvature <= 0.0) break;
    const double alpha = rr / curvature;
    w += alpha * d;
    r -= alpha * ffd;
    const double rr_next = r.squaredNorm();
    d = r + (rr_next / rr) * d;
    rr = rr_next;
  }
  Eigen::VectorXd ftw;
  MultiplyTransposeInto(f, w, ftw);
  v -= ftw;
  return absl::OkStatus();
}

absl::StatusOr<Eigen::VectorXd> DykstraProject(const Eigen::VectorXd& p,
                                               const PolyhedralSystem& system,
                                               const ProjectionOptions& opt) {
  const SparseMatrix& g = system.ineq_matrix;
  const int m_i = g.rows();
  Eigen::VectorXd row_sq(m_i);
  for (int i = 0; i < m_i; ++i) {
    double s = 0.0;
    for (double v : g.RowValues(i)) s += v * v;
    row_sq[i] = s;
  }
  // Halfspace corrections are multiples λ_i of the row normal.
  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(m_i);
  Eigen::VectorXd x = p;
  const double scale = std::max(1.0, p.norm());
  for (int64_t it = 0; it < opt.max_iter; ++it) {
    const Eigen::VectorXd previous = x;
    if (system.num_eq() > 0) {
      if (absl::Status s = ProjectAffine(system, x, opt.tol); !s.ok()) {
        return s;
      }
    }
    for (int i = 0; i < m_i; ++i) {
      if (row_sq[i] == 0.0) continue;
      const auto cols = g.RowIndices(i);
      const auto vals = g.RowValues(i);
      // v = x + λ_i a_i, then project v onto a_iᵀv ≤ b_i.
      double av = 0.0;
      for (size_t k = 0; k < cols.size(); ++k) {
        x[cols[k]] += lambda[i] * vals[k];
        av += vals[k] * x[cols[k]];
      }
      const double excess = std::max(0.0, av - system.ineq_rhs[i]);
      lambda[i] = excess / row_sq[i];
      for (size_t k = 0; k < cols.size(); ++k) {
        x[cols[k]] -= lambda[i] * vals[k];
      }
    }
    if ((x - previous).norm() <= opt.tol * scale &&
        system.Residual(x) <= opt.tol * scale) {
      return x;
    }
  }
  return absl::FailedPreconditionError(absl::StrCat(
      "Dykstra projection did not converge in ", opt.max_iter,
      " cycles; feasibility residual ", system.Residual(x),
      " (infeasible or ill-conditioned system)"));
}

}  // namespace

absl::Status PolyhedralSystem::Validate() const {
  if (eq_matrix.cols() != ineq_matrix.cols()) {
    return absl::InvalidArgumentError(
        absl::StrCat("equality block has ", eq_matrix.cols(),
                     " columns, inequality block has ", ineq_matrix.cols()));
  }
  if (eq_rhs.size() != eq_matrix.rows() ||
      ineq_rhs.size() != ineq_matrix.rows()) {
    return absl::InvalidArgumentError(
        "right-hand side lengths do not match the system rows");
  }
  if (!eq_rhs.allFinite() || !ineq_rhs.allFinite()) {
    return absl::InvalidArgumentError("non-finite right-hand side");
  }
  return absl::OkStatus();
}

double PolyhedralSystem::Residual(const Eigen::VectorXd& p) const {
  Eigen::VectorXd fp, gp;
  MultiplyInto(eq_matrix, p, fp);
  MultiplyInto(ineq_matrix, p, gp);
  return std::sqrt((fp - eq_rhs).squaredNorm() +
                   (gp - ineq_rhs).cwiseMax(0.0).squaredNorm());
}

PolyhedralSystem PolyhedralSystem::Homogeneous(const SparseMatrix& eq,
                                               const SparseMatrix& ineq) {
  return {eq, Eigen::VectorXd::Zero(eq.rows()), ineq,
          Eigen::VectorXd::Zero(ineq.rows())};
}

absl::StatusOr<Eigen::VectorXd> ProjectOntoPolyhedron(
    const Eigen::VectorXd& p, const PolyhedralSystem& system,
    const ProjectionOptions& options) {
  if (absl::Status s = system.Validate(); !s.ok()) return s;
  if (p.size() != system.num_vars()) {
    return absl::InvalidArgumentError(
        absl::StrCat("point of length ", p.size(), " for a system in ",
                     system.num_vars(), " variables"));
  }
  ProjectionMethod method = options.method;
  if (method == ProjectionMethod::kAuto) {
    method = system.num_vars() + system.num_eq() + system.num_ineq() <=
                     options.dense_limit
                 ? ProjectionMethod::kActiveSet
                 : ProjectionMethod::kDykstra;
  }
  if (method == ProjectionMethod::kActiveSet) {
    const int64_t max_steps =
        50 * static_cast<int64_t>(system.num_vars() + system.num_eq() +
                                  system.num_ineq()) +
        1000;
    return ActiveSetProjector(system).Project(p, max_steps);
  }
  return DykstraProject(p, system, options);
}

absl::StatusOr<double> DistanceToPolyhedron(const Eigen::VectorXd& p,
                                            const PolyhedralSystem& system,
                                            const ProjectionOptions& options) {
  absl::StatusOr<Eigen::VectorXd> q = ProjectOntoPolyhedron(p, system, options);
  if (!q.ok()) return q.status();
  return (p - *q).norm();
}

absl::StatusOr<bool> IsFeasible(const PolyhedralSystem& system) {
  absl::StatusOr<Eigen::VectorXd> q = ProjectOntoPolyhedron(
      Eigen::VectorXd::Zero(system.num_vars()), system,
      {.method = ProjectionMethod::kActiveSet});
  if (q.ok()) return true;
  if (absl::IsFailedPrecondition(q.status())) return false;
  return q.status();
}

}  // namespace pdhg
