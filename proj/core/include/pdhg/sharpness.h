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

// Sharpness (reciprocal Hoffman constant) of linear inequality systems.
//
// For a system Fx = g, F̃x ≤ g̃ with solution set X*, the sharpness is the
// largest α with α·dist(x, X*) ≤ ‖(Fx − g; [F̃x − g̃]⁺)‖ for all x. This
// header offers three views of it:
//  - EmpiricalSharpness: residual/distance ratios at probe points, an upper
//    bound on α.
//  - HoffmanBruteForce: the Hoffman constant by subset enumeration, for
//    tiny systems only. It is uniform over right-hand sides, hence a lower
//    bound on the sharpness of the system at any particular (g, g̃).
//  - AnalyzeHomogeneousSystem: bounds for homogeneous systems Fv = 0,
//    F̃v ≤ 0 through the split into the subspace L = {Fv = 0, F̃_P v = 0}
//    and the cone K = {F̃_Q v ≤ 0}, where Q are the rows that some feasible
//    v satisfies strictly and P the rows every feasible v satisfies with
//    equality. Then α(L,K)·min{α₀(L), α₀(K)} ≤ α ≤ min{α₀(L), α₀(K)}.

#ifndef PDHG_SHARPNESS_H_
#define PDHG_SHARPNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "pdhg/projection.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {

// min over infeasible probes p of ‖(Fp − g; [F̃p − g̃]⁺)‖ / dist(p, X*).
// Probes with residual ≤ 1e-12·max(1, ‖p‖) are skipped; errors when every
// probe is skipped or when the system is infeasible.
absl::StatusOr<double> EmpiricalSharpness(
    const PolyhedralSystem& system, std::span<const Eigen::VectorXd> probes,
    const ProjectionOptions& options = {.tol = 1e-10});

// Reciprocal Hoffman constant by enumeration:
//   α = min_{J ∈ S} min { ‖F̃_Jᵀv + Fᵀz‖ : v ≥ 0, z ∈ range(F), ‖(v,z)‖ = 1 },
// where J ∈ S iff some x has Fx = 0 and F̃_J x < 0 (this family is closed
// under subsets and, for F ≠ 0, contains ∅). Each inner problem is reduced
// to eigenvectors of Mᵀ M with M = [F̃_Tᵀ, FᵀU] over supports T ⊆ J, U an
// orthonormal basis of range(F), keeping those with v ≥ 0.
// Errors when num_eq + num_ineq + num_vars exceeds dim_limit.
absl::StatusOr<double> HoffmanBruteForce(const PolyhedralSystem& system,
                                         int dim_limit = 10);

struct HomogeneousPartition {
  // Inequality rows satisfied with equality by every feasible v.
  std::vector<int> p;
  // Rows some feasible v satisfies strictly.
  std::vector<int> q;
  // Rows whose auxiliary PDHG solve missed its tolerance and were decided by
  // the exact active-set feasibility test instead.
  std::vector<int> fallback_rows;
};

struct PartitionOptions {
  // Auxiliary-LP accuracy and the strictness threshold on its optimum t*.
  double solve_tol = 1e-9;
  double strict_tol = 1e-7;
  int64_t max_iters = 200000;
};

// Row i is in Q iff max { t : Fv = 0, F̃v ≤ 0, F̃_i v + t ≤ 0, ‖v‖_∞ ≤ 1 }
// exceeds strict_tol. Each auxiliary LP is solved by PDHG; when PDHG stops
// short of solve_tol the row is decided by IsFeasible on
// {Fv = 0, F̃v ≤ 0, F̃_i v ≤ −1}.
absl::StatusOr<HomogeneousPartition> ComputeHomogeneousPartition(
    const SparseMatrix& eq, const SparseMatrix& ineq,
    const PartitionOptions& options = {});

struct Alpha0Bounds {
  // min { ‖(Fξ; [F̃_P ξ]⁺)‖ : ξ ∈ L^⊥, ‖ξ‖ = 1 }; +∞ if L^⊥ = {0}.
  double alpha0_l_lower = 0.0;
  bool alpha0_l_certified = false;
  // min { ‖F̃_Qᵀw‖ : w ≥ 0, ‖w‖ = 1 }; +∞ if Q = ∅.
  double alpha0_k_lower = 0.0;
  bool alpha0_k_certified = false;
};

struct Alpha0Options {
  // Support enumeration is exact up to this many rows (Q rows for the K
  // side, P rows for the L side); beyond it a seeded
  // multi-start descent produces an uncertified estimate.
  int max_enumeration_rows = 12;
  int estimate_starts = 200;
  uint64_t seed = 0;
};

absl::StatusOr<Alpha0Bounds> ComputeAlpha0Bounds(
    const SparseMatrix& eq, const SparseMatrix& ineq,
    const HomogeneousPartition& partition, const Alpha0Options& options = {});

// max{dist(u, L), dist(u, K)} / dist(u, L ∩ K). Errors if u ∈ L ∩ K.
absl::StatusOr<double> AngleRatio(const Eigen::VectorXd& u,
                                  const PolyhedralSystem& l,
                                  const PolyhedralSystem& k);

// Minimum of AngleRatio over seeded probes: Gaussian points, their
// projections onto L and onto K, and points moved off L ∩ K along L and
// along K. This upper-estimates the infimum α(L, K).
absl::StatusOr<double> EstimateAngle(const PolyhedralSystem& l,
                                     const PolyhedralSystem& k, int samples,
                                     uint64_t seed);

struct HomogeneousSharpnessReport {
  HomogeneousPartition partition;
  double alpha0_l_lower = 0.0;
  bool alpha0_l_certified = false;
  double alpha0_k_lower = 0.0;
  bool alpha0_k_certified = false;
  double angle_estimate = 0.0;
  // Exact when L ∩ K equals L or K (then α(L, K) = 1).
  bool angle_certified = false;
  // angle_estimate · min(alpha0_l_lower, alpha0_k_lower).
  double alpha_lower = 0.0;
  bool alpha_lower_certified = false;
  // min(alpha0_l_lower, alpha0_k_lower).
  double alpha_upper = 0.0;
  // HoffmanBruteForce value (a certified lower bound on α) when the system
  // is small enough to enumerate.
  std::optional<double> brute_force;
};

struct HomogeneousAnalysisOptions {
  PartitionOptions partition;
  Alpha0Options alpha0;
  int angle_samples = 200;
  uint64_t seed = 0;
  // HoffmanBruteForce runs when rows + cols ≤ this; 0 disables it.
  int brute_force_limit = 10;
};

absl::StatusOr<HomogeneousSharpnessReport> AnalyzeHomogeneousSystem(
    const SparseMatrix& eq, const SparseMatrix& ineq,
    const HomogeneousAnalysisOptions& options = {});

// One `key: value` line per field; each bound carries `certified: true` or
// `certified: false`.
std::string FormatReport(const HomogeneousSharpnessReport& report);

}  // namespace pdhg

#endif  // PDHG_SHARPNESS_H_
