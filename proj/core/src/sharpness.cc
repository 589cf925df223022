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

#include "pdhg/sharpness.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "Eigen/Eigenvalues"
#include "Eigen/SVD"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "pdhg/lp.h"
#include "pdhg/pdhg.h"
#include "pdhg/projection.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Orthonormal basis of the column space of m.
Eigen::MatrixXd ColumnSpaceBasis(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(svd.rank());
}

// Orthonormal basis of the row space of m (as columns).
Eigen::MatrixXd RowSpaceBasis(const Eigen::MatrixXd& m) {
  return ColumnSpaceBasis(m.transpose());
}

std::vector<int> MaskToIndices(uint32_t mask, int size) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

Eigen::MatrixXd SelectDenseRows(const Eigen::MatrixXd& m,
                                const std::vector<int>& rows) {
  Eigen::MatrixXd out(rows.size(), m.cols());
  for (size_t k = 0; k < rows.size(); ++k) out.row(k) = m.row(rows[k]);
  return out;
}

// Evaluates ‖M (v; w)‖ / ‖(v; w)‖ at the point obtained from an eigenvector
// by clipping its first num_signed entries at zero. Returns +∞ when the
// clipped point is (numerically) zero.
double ClippedRayleigh(const Eigen::MatrixXd& m, Eigen::VectorXd e,
                       int num_signed) {
  e.head(num_signed) = e.head(num_signed).cwiseMax(0.0);
  const double norm = e.norm();
  if (norm < 1e-8) return kInf;
  return (m * e).norm() / norm;
}

// Minimum of ‖M x‖ over unit x with x_{0..num_signed-1} ≥ 0, restricted to
// candidates that are eigenvectors of MᵀM (both signs). Exact when the
// minimizer is strictly positive on the signed block.
double EigenCandidatesMin(const Eigen::MatrixXd& m, int num_signed) {
  if (m.cols() == 0) return kInf;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.transpose() * m);
  const Eigen::MatrixXd& vecs = eig.eigenvectors();
  double best = kInf;
  for (int k = 0; k < vecs.cols(); ++k) {
    best = std::min(best, ClippedRayleigh(m, vecs.col(k), num_signed));
    best = std::min(best, ClippedRayleigh(m, -vecs.col(k), num_signed));
  }
  return best;
}

absl::StatusOr<PolyhedralSystem> Intersect(const PolyhedralSystem& a,
                                           const PolyhedralSystem& b) {
  absl::StatusOr<SparseMatrix> eq = SparseMatrix::VStack(a.eq_matrix,
                                                         b.eq_matrix);
  if (!eq.ok()) return eq.status();
  absl::StatusOr<SparseMatrix> ineq =
      SparseMatrix::VStack(a.ineq_matrix, b.ineq_matrix);
  if (!ineq.ok()) return ineq.status();
  PolyhedralSystem out;
  out.eq_matrix = *std::move(eq);
  out.ineq_matrix = *std::move(ineq);
  out.eq_rhs.resize(a.num_eq() + b.num_eq());
  out.eq_rhs << a.eq_rhs, b.eq_rhs;
  out.ineq_rhs.resize(a.num_ineq() + b.num_ineq());
  out.ineq_rhs << a.ineq_rhs, b.ineq_rhs;
  return out;
}

const ProjectionOptions kAngleProjection = {.tol = 1e-9};

}  // namespace

absl::StatusOr<double> EmpiricalSharpness(
    const PolyhedralSystem& system, std::span<const Eigen::VectorXd> probes,
    const ProjectionOptions& options) {
  if (absl::Status s = system.Validate(); !s.ok()) return s;
  double best = kInf;
  int used = 0;
  for (const Eigen::VectorXd& p : probes) {
    if (p.size() != system.num_vars()) {
      return absl::InvalidArgumentError(
          absl::StrCat("probe of length ", p.size(), " for a system in ",
                       system.num_vars(), " variables"));
    }
    const double residual = system.Residual(p);
    if (residual <= 1e-12 * std::max(1.0, p.norm())) continue;
    absl::StatusOr<double> dist = DistanceToPolyhedron(p, system, options);
    if (!dist.ok()) return dist.status();
    if (*dist <= 0.0) continue;
    best = std::min(best, residual / *dist);
    ++used;
  }
  if (used == 0) {
    return absl::InvalidArgumentError(
        "every probe is feasible; sharpness ratio undefined");
  }
  return best;
}

absl::StatusOr<double> HoffmanBruteForce(const PolyhedralSystem& system,
                                         int dim_limit) {
  if (absl::Status s = system.Validate(); !s.ok()) return s;
  const int n = system.num_vars();
  const int m_e = system.num_eq();
  const int m_i = system.num_ineq();
  if (n + m_e + m_i > dim_limit) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "system has ", m_e + m_i, " rows and ", n,
        " columns, above the brute-force limit ", dim_limit,
        "; use EmpiricalSharpness for an upper estimate"));
  }
  if (m_i > 30) {
    return absl::ResourceExhaustedError("too many inequality rows");
  }
  const Eigen::MatrixXd f = system.eq_matrix.ToDense();
  const Eigen::MatrixXd g = system.ineq_matrix.ToDense();
  // z ∈ range(F) is written z = U w.
  const Eigen::MatrixXd ftu = f.transpose() * ColumnSpaceBasis(f);
  const int r = static_cast<int>(ftu.cols());

  const uint32_t num_masks = 1u << m_i;
  std::vector<char> in_s(num_masks, 0);
  double best = kInf;
  for (uint32_t mask = 0; mask < num_masks; ++mask) {
    const std::vector<int> rows = MaskToIndices(mask, m_i);
    bool admissible = true;
    for (int i : rows) {
      if (!in_s[mask ^ (1u << i)]) {
        admissible = false;
        break;
      }
    }
    if (admissible && !rows.empty()) {
      // J ∈ S iff {Fx = 0, F̃_J x ≤ −1} is feasible.
      PolyhedralSystem strict;
      strict.eq_matrix = system.eq_matrix;
      strict.eq_rhs = Eigen::VectorXd::Zero(m_e);
      strict.ineq_matrix = system.ineq_matrix.SelectRows(rows);
      strict.ineq_rhs = Eigen::VectorXd::Constant(rows.size(), -1.0);
      absl::StatusOr<bool> feasible = IsFeasible(strict);
      if (!feasible.ok()) return feasible.status();
      admissible = *feasible;
    }
    in_s[mask] = admissible;
    if (!admissible) continue;
    if (rows.empty() && r == 0) continue;
    Eigen::MatrixXd m(n, rows.size() + r);
    m.leftCols(rows.size()) = SelectDenseRows(g, rows).transpose();
    m.rightCols(r) = ftu;
    best = std::min(best,
                    EigenCandidatesMin(m, static_cast<int>(rows.size())));
  }
  return best;
}

absl::StatusOr<HomogeneousPartition> ComputeHomogeneousPartition(
    const SparseMatrix& eq, const SparseMatrix& ineq,
    const PartitionOptions& options) {
  if (eq.cols() != ineq.cols()) {
    return absl::InvalidArgumentError("column counts differ");
  }
  const int n = eq.cols();
  const int m_i = ineq.rows();
  HomogeneousPartition out;
  if (m_i == 0) return out;

  // Variables (v⁺, v⁻, t) ≥ 0 with v = v⁺ − v⁻.
  const SparseMatrix eq_split =
      *SparseMatrix::HStack(*SparseMatrix::HStack(eq, eq.Negated()),
                            SparseMatrix::Zero(eq.rows(), 1));
  const SparseMatrix ineq_split =
      *SparseMatrix::HStack(*SparseMatrix::HStack(ineq, ineq.Negated()),
                            SparseMatrix::Zero(m_i, 1));
  const SparseMatrix box = *SparseMatrix::HStack(
      SparseMatrix::Identity(2 * n), SparseMatrix::Zero(2 * n, 1));

  std::vector<char> strict(m_i, 0);
  for (int i = 0; i < m_i; ++i) {
    if (strict[i]) continue;
    std::vector<Triplet> row_i;
    for (const Triplet& t : ineq_split.SelectRows(std::vector<int>{i})
                                .ToTriplets()) {
      row_i.push_back(t);
    }
    row_i.push_back({0, 2 * n, 1.0});
    const SparseMatrix target = *SparseMatrix::FromTriplets(1, 2 * n + 1,
                                                            row_i);
    GeneralLp aux;
    aux.a_eq = eq_split;
    aux.b_eq = Eigen::VectorXd::Zero(eq.rows());
    aux.a_ineq = *SparseMatrix::VStack(
        *SparseMatrix::VStack(ineq_split, target), box);
    aux.b_ineq = Eigen::VectorXd::Zero(m_i + 1 + 2 * n);
    aux.b_ineq.tail(2 * n).setOnes();
    aux.c = Eigen::VectorXd::Zero(2 * n + 1);
    aux.c[2 * n] = -1.0;

    SolverConfig config;
    config.kkt_tol = options.solve_tol;
    config.max_iters = options.max_iters;
    config.log_every = 64;
    config.fill_distance_to_final = false;
    absl::StatusOr<SolveResult> result = Solve(aux, config);
    if (!result.ok()) return result.status();
    if (result->status != SolveStatus::kOptimal) {
      // Slow PDHG convergence on degenerate auxiliary problems: decide the
      // row exactly instead, t* > 0 iff {Fv = 0, F̃v ≤ 0, F̃_i v ≤ −1} ≠ ∅.
      out.fallback_rows.push_back(i);
      PolyhedralSystem test;
      test.eq_matrix = eq;
      test.eq_rhs = Eigen::VectorXd::Zero(eq.rows());
      test.ineq_matrix = ineq;
      test.ineq_rhs = Eigen::VectorXd::Zero(m_i);
      test.ineq_rhs[i] = -1.0;
      absl::StatusOr<bool> feasible = IsFeasible(test);
      if (!feasible.ok()) {
        return absl::InternalError(absl::StrCat(
            "auxiliary LP for row ", i, " ended with status ",
            SolveStatusName(result->status), " at KKT residual ",
            result->final_kkt, "; exact check failed: ",
            feasible.status().message()));
      }
      if (*feasible) strict[i] = 1;
      continue;
    }
    const Eigen::VectorXd& x = result->z_final.x;
    if (x[2 * n] <= options.strict_tol) continue;
    strict[i] = 1;
    // The same v may certify other rows as strict.
    const Eigen::VectorXd v = x.head(n) - x.segment(n, n);
    Eigen::VectorXd gv;
    MultiplyInto(ineq, v, gv);
    for (int j = 0; j < m_i; ++j) {
      if (gv[j] < -options.strict_tol) strict[j] = 1;
    }
  }
  for (int i = 0; i < m_i; ++i) (strict[i] ? out.q : out.p).push_back(i);
  return out;
}

absl::StatusOr<Alpha0Bounds> ComputeAlpha0Bounds(
    const SparseMatrix& eq, const SparseMatrix& ineq,
    const HomogeneousPartition& partition, const Alpha0Options& options) {
  if (eq.cols() != ineq.cols()) {
    return absl::InvalidArgumentError("column counts differ");
  }
  if (partition.p.size() + partition.q.size() !=
      static_cast<size_t>(ineq.rows())) {
    return absl::InvalidArgumentError(
        "partition does not cover the inequality rows");
  }
  const int n = eq.cols();
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  Alpha0Bounds out;

  // K side: min ‖F̃_Qᵀw‖ over w ≥ 0, ‖w‖ = 1.
  const Eigen::MatrixXd g_q = ineq.SelectRows(partition.q).ToDense();
  const int num_q = static_cast<int>(g_q.rows());
  if (num_q == 0) {
    out.alpha0_k_lower = kInf;
    out.alpha0_k_certified = true;
  } else if (num_q <= options.max_enumeration_rows) {
    double best = kInf;
    for (uint32_t mask = 1; mask < (1u << num_q); ++mask) {
      const Eigen::MatrixXd m =
          SelectDenseRows(g_q, MaskToIndices(mask, num_q)).transpose();
      best = std::min(best, EigenCandidatesMin(m, static_cast<int>(m.cols())));
    }
    out.alpha0_k_lower = best;
    out.alpha0_k_certified = true;
  } else {
    // Projected gradient on the sphere ∩ orthant from random starts.
    const Eigen::MatrixXd gram = g_q * g_q.transpose();
    const double step = 1.0 / std::max(1e-300, gram.diagonal().sum());
    double best = kInf;
    for (int start = 0; start < options.estimate_starts; ++start) {
      Eigen::VectorXd w(num_q);
      for (int k = 0; k < num_q; ++k) w[k] = std::abs(normal(rng));
      w.normalize();
      for (int it = 0; it < 500; ++it) {
        Eigen::VectorXd next = (w - step * (gram * w)).cwiseMax(0.0);
        if (next.norm() == 0.0) break;
        w = next.normalized();
      }
      best = std::min(best, (g_q.transpose() * w).norm());
    }
    out.alpha0_k_lower = best;
    out.alpha0_k_certified = false;
  }

  // L side: min ‖(Fξ; [F̃_P ξ]⁺)‖ over unit ξ in L^⊥, the row space of
  // W = (F; F̃_P). This is exactly the sharpness of {Fv = 0, F̃_P v ≤ 0}.
  const int m_e = eq.rows();
  const int num_p = static_cast<int>(partition.p.size());
  Eigen::MatrixXd w(m_e + num_p, n);
  w.topRows(m_e) = eq.ToDense();
  w.bottomRows(num_p) = ineq.SelectRows(partition.p).ToDense();
  const Eigen::MatrixXd basis = RowSpaceBasis(w);
  const int d = static_cast<int>(basis.cols());
  if (d == 0) {
    out.alpha0_l_lower = kInf;
    out.alpha0_l_certified = true;
  } else {
    const Eigen::MatrixXd m_eq = w.topRows(m_e) * basis;
    const Eigen::MatrixXd m_p = w.bottomRows(num_p) * basis;
    const Eigen::MatrixXd eq_gram = m_eq.transpose() * m_eq;
    double best = kInf;
    auto consider = [&](const Eigen::VectorXd& xi) {
      const Eigen::VectorXd unit = xi.normalized();
      best = std::min(best, std::sqrt((m_eq * unit).squaredNorm() +
                                      (m_p * unit).cwiseMax(0.0).squaredNorm()));
    };
    if (num_p <= options.max_enumeration_rows) {
      // A minimizer is an eigenvector of FᵀF + M_TᵀM_T for T its own set of
      // positive P rows; evaluating every such candidate is exact.
      for (uint32_t mask = 0; mask < (1u << num_p); ++mask) {
        const Eigen::MatrixXd m_t =
            SelectDenseRows(m_p, MaskToIndices(mask, num_p));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
            eq_gram + m_t.transpose() * m_t);
        for (int k = 0; k < d; ++k) {
          consider(eig.eigenvectors().col(k));
          consider(-eig.eigenvectors().col(k));
        }
      }
      out.alpha0_l_certified = true;
    } else {
      const double step = 1.0 / std::max(1e-300, w.squaredNorm());
      for (int start = 0; start < options.estimate_starts; ++start) {
        Eigen::VectorXd xi(d);
        for (int k = 0; k < d; ++k) xi[k] = normal(rng);
        xi.normalize();
        for (int it = 0; it < 500; ++it) {
          const Eigen::VectorXd grad =
              eq_gram * xi + m_p.transpose() * (m_p * xi).cwiseMax(0.0);
          xi = (xi - step * grad).normalized();
        }
        consider(xi);
      }
      out.alpha0_l_certified = false;
    }
    out.alpha0_l_lower = best;
  }
  return out;
}

absl::StatusOr<double> AngleRatio(const Eigen::VectorXd& u,
                                  const PolyhedralSystem& l,
                                  const PolyhedralSystem& k) {
  absl::StatusOr<PolyhedralSystem> both = Intersect(l, k);
  if (!both.ok()) return both.status();
  absl::StatusOr<double> d_both =
      DistanceToPolyhedron(u, *both, kAngleProjection);
  if (!d_both.ok()) return d_both.status();
  if (*d_both <= 1e-12 * std::max(1.0, u.norm())) {
    return absl::InvalidArgumentError("point lies in the intersection");
  }
  absl::StatusOr<double> d_l = DistanceToPolyhedron(u, l, kAngleProjection);
  if (!d_l.ok()) return d_l.status();
  absl::StatusOr<double> d_k = DistanceToPolyhedron(u, k, kAngleProjection);
  if (!d_k.ok()) return d_k.status();
  return std::max(*d_l, *d_k) / *d_both;
}

absl::StatusOr<double> EstimateAngle(const PolyhedralSystem& l,
                                     const PolyhedralSystem& k, int samples,
                                     uint64_t seed) {
  if (l.num_vars() != k.num_vars()) {
    return absl::InvalidArgumentError("systems differ in dimension");
  }
  const int n = l.num_vars();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double best = kInf;
  auto consider = [&](const Eigen::VectorXd& u) -> absl::Status {
    absl::StatusOr<double> ratio = AngleRatio(u, l, k);
    if (ratio.ok()) {
      best = std::min(best, *ratio);
      return absl::OkStatus();
    }
    if (absl::IsInvalidArgument(ratio.status())) return absl::OkStatus();
    return ratio.status();
  };
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd g(n);
    for (int i = 0; i < n; ++i) g[i] = normal(rng);
    absl::StatusOr<Eigen::VectorXd> on_l =
        ProjectOntoPolyhedron(g, l, kAngleProjection);
    if (!on_l.ok()) return on_l.status();
    absl::StatusOr<Eigen::VectorXd> on_k =
        ProjectOntoPolyhedron(g, k, kAngleProjection);
    if (!on_k.ok()) return on_k.status();
    for (const Eigen::VectorXd& u :
         {g, *on_l, *on_k, Eigen::VectorXd(0.5 * (*on_l + *on_k))}) {
      if (absl::Status st = consider(u); !st.ok()) return st;
    }
  }
  if (best == kInf) {
    return absl::InvalidArgumentError(
        "every probe lies in the intersection of L and K");
  }
  return best;
}

absl::StatusOr<HomogeneousSharpnessReport> AnalyzeHomogeneousSystem(
    const SparseMatrix& eq, const SparseMatrix& ineq,
    const HomogeneousAnalysisOptions& options) {
  absl::StatusOr<HomogeneousPartition> partition =
      ComputeHomogeneousPartition(eq, ineq, options.partition);
  if (!partition.ok()) return partition.status();
  absl::StatusOr<Alpha0Bounds> alpha0 =
      ComputeAlpha0Bounds(eq, ineq, *partition, options.alpha0);
  if (!alpha0.ok()) return alpha0.status();

  HomogeneousSharpnessReport report;
  report.partition = *partition;
  report.alpha0_l_lower = alpha0->alpha0_l_lower;
  report.alpha0_l_certified = alpha0->alpha0_l_certified;
  report.alpha0_k_lower = alpha0->alpha0_k_lower;
  report.alpha0_k_certified = alpha0->alpha0_k_certified;

  const int n = eq.cols();
  const bool l_is_everything = std::isinf(alpha0->alpha0_l_lower);
  if (partition->q.empty() || l_is_everything) {
    report.angle_estimate = 1.0;
    report.angle_certified = true;
  } else {
    PolyhedralSystem l;
    l.eq_matrix = *SparseMatrix::VStack(eq, ineq.SelectRows(partition->p));
    l.eq_rhs = Eigen::VectorXd::Zero(l.eq_matrix.rows());
    l.ineq_matrix = SparseMatrix::Zero(0, n);
    l.ineq_rhs = Eigen::VectorXd(0);
    const PolyhedralSystem k = PolyhedralSystem::Homogeneous(
        SparseMatrix::Zero(0, n), ineq.SelectRows(partition->q));
    absl::StatusOr<double> angle =
        EstimateAngle(l, k, options.angle_samples, options.seed);
    if (!angle.ok()) return angle.status();
    report.angle_estimate = *angle;
    report.angle_certified = false;
  }
  report.alpha_upper = std::min(report.alpha0_l_lower, report.alpha0_k_lower);
  report.alpha_lower = report.angle_estimate * report.alpha_upper;
  report.alpha_lower_certified = report.angle_certified &&
                                 report.alpha0_l_certified &&
                                 report.alpha0_k_certified;

  const int size = eq.rows() + ineq.rows() + n;
  if (options.brute_force_limit > 0 && size <= options.brute_force_limit) {
    absl::StatusOr<double> exact = HoffmanBruteForce(
        PolyhedralSystem::Homogeneous(eq, ineq), options.brute_force_limit);
    if (!exact.ok()) return exact.status();
    report.brute_force = *exact;
  }
  return report;
}

std::string FormatReport(const HomogeneousSharpnessReport& report) {
  auto bound = [](const char* key, double value, bool certified) {
    return absl::StrFormat("%s: %.10g certified: %s\n", key, value,
                           certified ? "true" : "false");
  };
  std::string out;
  absl::StrAppend(&out, "P: ", absl::StrJoin(report.partition.p, " "), "\n");
  absl::StrAppend(&out, "Q: ", absl::StrJoin(report.partition.q, " "), "\n");
  absl::StrAppend(&out, bound("alpha0_L_lower", report.alpha0_l_lower,
                              report.alpha0_l_certified));
  absl::StrAppend(&out, bound("alpha0_K_lower", report.alpha0_k_lower,
                              report.alpha0_k_certified));
  absl::StrAppend(&out, bound("angle_lower_estimate", report.angle_estimate,
                              report.angle_certified));
  absl::StrAppend(&out, bound("alpha_lower", report.alpha_lower,
                              report.alpha_lower_certified));
  absl::StrAppend(&out, bound("alpha_upper", report.alpha_upper, false));
  if (report.brute_force.has_value()) {
    absl::StrAppend(&out, bound("alpha_brute_force", *report.brute_force,
                                true));
  }
  return out;
}

}  // namespace pdhg
