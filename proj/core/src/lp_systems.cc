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

#include "pdhg/lp_systems.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "pdhg/lp.h"
#include "pdhg/projection.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {
namespace {

// Collects rows of a system incrementally as triplets.
class RowBuilder {
 public:
  explicit RowBuilder(int num_cols) : num_cols_(num_cols) {}

  // Appends the rows of `block`, scaled, with columns remapped through
  // col_map (block column j lands in col_map[j]).
  void AddBlock(const SparseMatrix& block, const std::vector<int>& col_map,
                double scale = 1.0) {
    for (const Triplet& t : block.ToTriplets()) {
      triplets_.push_back({num_rows_ + t.row, col_map[t.col], scale * t.value});
    }
    num_rows_ += block.rows();
  }

  void AddRow(const std::vector<std::pair<int, double>>& entries) {
    for (const auto& [col, value] : entries) {
      if (value != 0.0) triplets_.push_back({num_rows_, col, value});
    }
    ++num_rows_;
  }

  int rows() const { return num_rows_; }

  absl::StatusOr<SparseMatrix> Build() const {
    return SparseMatrix::FromTriplets(num_rows_, num_cols_, triplets_);
  }

 private:
  int num_cols_;
  int num_rows_ = 0;
  std::vector<Triplet> triplets_;
};

std::vector<int> Offset(int count, int offset) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = offset + i;
  return out;
}

absl::Status CheckInputs(const StandardLp& lp, const Partition* partition,
                         double radius) {
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    return absl::InvalidArgumentError(
        absl::StrCat("radius must be positive and finite, got ", radius));
  }
  if (partition == nullptr) return absl::OkStatus();
  std::vector<int> seen(lp.num_vars(), 0);
  for (const std::vector<int>* set :
       {&partition->nonbasic, &partition->basic_strict,
        &partition->basic_degenerate}) {
    for (int j : *set) {
      if (j < 0 || j >= lp.num_vars()) {
        return absl::InvalidArgumentError(
            absl::StrCat("partition index ", j, " out of range"));
      }
      ++seen[j];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    return absl::InvalidArgumentError(
        "partition sets must cover every column exactly once");
  }
  return absl::OkStatus();
}

// The objective row (1/R)(cᵀ·primal − bᵀ·dual) over the given primal
// columns (mapped to system columns) and the dual block at dual_offset.
std::vector<std::pair<int, double>> GapRow(const StandardLp& lp,
                                           const std::vector<int>& primal_cols,
                                           const std::vector<int>& system_cols,
                                           int dual_offset, double radius) {
  std::vector<std::pair<int, double>> row;
  for (size_t k = 0; k < primal_cols.size(); ++k) {
    row.push_back({system_cols[k], lp.c[primal_cols[k]] / radius});
  }
  for (int i = 0; i < lp.num_rows(); ++i) {
    row.push_back({dual_offset + i, -lp.b[i] / radius});
  }
  return row;
}

std::vector<int> Sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Shared body of the active-cone and active-solution systems.
absl::StatusOr<PolyhedralSystem> BuildActive(const StandardLp& lp,
                                             const Partition& partition,
                                             double radius,
                                             bool homogeneous) {
  if (absl::Status s = CheckInputs(lp, &partition, radius); !s.ok()) return s;
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  const std::vector<int> basic = partition.Basic();
  std::vector<int> signed_cols = partition.nonbasic;
  signed_cols.insert(signed_cols.end(), partition.basic_degenerate.begin(),
                     partition.basic_degenerate.end());
  signed_cols = Sorted(signed_cols);

  RowBuilder eq(n + m);
  eq.AddBlock(lp.a, Offset(n, 0));
  RowBuilder ineq(n + m);
  ineq.AddBlock(lp.a.SelectColumns(basic).Transposed(), Offset(m, n));
  for (int j : signed_cols) ineq.AddRow({{j, -1.0}});
  ineq.AddRow(GapRow(lp, Offset(n, 0), Offset(n, 0), n, radius));

  PolyhedralSystem out;
  absl::StatusOr<SparseMatrix> eq_matrix = eq.Build();
  if (!eq_matrix.ok()) return eq_matrix.status();
  absl::StatusOr<SparseMatrix> ineq_matrix = ineq.Build();
  if (!ineq_matrix.ok()) return ineq_matrix.status();
  out.eq_matrix = *std::move(eq_matrix);
  out.ineq_matrix = *std::move(ineq_matrix);
  out.eq_rhs = homogeneous ? Eigen::VectorXd::Zero(m) : lp.b;
  out.ineq_rhs = Eigen::VectorXd::Zero(out.ineq_matrix.rows());
  if (!homogeneous) {
    for (size_t k = 0; k < basic.size(); ++k) out.ineq_rhs[k] = lp.c[basic[k]];
  }
  return out;
}

}  // namespace

absl::StatusOr<PolyhedralSystem> BuildKktSystem(const StandardLp& lp,
                                                double radius) {
  if (absl::Status s = CheckInputs(lp, nullptr, radius); !s.ok()) return s;
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  RowBuilder eq(n + m);
  eq.AddBlock(lp.a, Offset(n, 0));
  RowBuilder ineq(n + m);
  ineq.AddBlock(lp.a.Transposed(), Offset(m, n));
  ineq.AddBlock(SparseMatrix::Identity(n), Offset(n, 0), -1.0);
  ineq.AddRow(GapRow(lp, Offset(n, 0), Offset(n, 0), n, radius));

  PolyhedralSystem out;
  absl::StatusOr<SparseMatrix> eq_matrix = eq.Build();
  if (!eq_matrix.ok()) return eq_matrix.status();
  absl::StatusOr<SparseMatrix> ineq_matrix = ineq.Build();
  if (!ineq_matrix.ok()) return ineq_matrix.status();
  out.eq_matrix = *std::move(eq_matrix);
  out.ineq_matrix = *std::move(ineq_matrix);
  out.eq_rhs = lp.b;
  out.ineq_rhs = Eigen::VectorXd::Zero(2 * n + 1);
  out.ineq_rhs.head(n) = lp.c;
  return out;
}

absl::StatusOr<PolyhedralSystem> BuildActiveSolutionSystem(
    const StandardLp& lp, const Partition& partition, double radius) {
  return BuildActive(lp, partition, radius, /*homogeneous=*/false);
}

absl::StatusOr<PolyhedralSystem> BuildActiveConeSystem(
    const StandardLp& lp, const Partition& partition, double radius) {
  return BuildActive(lp, partition, radius, /*homogeneous=*/true);
}

absl::StatusOr<PolyhedralSystem> BuildLocalConeSystem(
    const StandardLp& lp, const Partition& partition, double radius) {
  if (absl::Status s = CheckInputs(lp, &partition, radius); !s.ok()) return s;
  const int m = lp.num_rows();
  const std::vector<int> basic = partition.Basic();
  const int nb = static_cast<int>(basic.size());
  const SparseMatrix a_b = lp.a.SelectColumns(basic);

  RowBuilder eq(nb + m);
  eq.AddBlock(a_b, Offset(nb, 0));
  RowBuilder ineq(nb + m);
  ineq.AddBlock(a_b.Transposed(), Offset(m, nb));
  for (int j : Sorted(partition.basic_degenerate)) {
    const int pos = static_cast<int>(
        std::lower_bound(basic.begin(), basic.end(), j) - basic.begin());
    ineq.AddRow({{pos, -1.0}});
  }
  ineq.AddRow(GapRow(lp, basic, Offset(nb, 0), nb, radius));

  PolyhedralSystem out;
  absl::StatusOr<SparseMatrix> eq_matrix = eq.Build();
  if (!eq_matrix.ok()) return eq_matrix.status();
  absl::StatusOr<SparseMatrix> ineq_matrix = ineq.Build();
  if (!ineq_matrix.ok()) return ineq_matrix.status();
  out.eq_matrix = *std::move(eq_matrix);
  out.ineq_matrix = *std::move(ineq_matrix);
  out.eq_rhs = Eigen::VectorXd::Zero(m);
  out.ineq_rhs = Eigen::VectorXd::Zero(out.ineq_matrix.rows());
  return out;
}

}  // namespace pdhg
