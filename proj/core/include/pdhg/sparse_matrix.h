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

#ifndef PDHG_SPARSE_MATRIX_H_
#define PDHG_SPARSE_MATRIX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"

namespace pdhg {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Compressed row storage. Column indices are strictly increasing within each
// row and no explicit zeros are stored.
class SparseMatrix {
 public:
  // An empty 0x0 matrix.
  SparseMatrix() = default;

  // Duplicate (row, col) entries are summed; entries that are (or sum to)
  // exactly zero are dropped. Fails on out-of-range indices, negative
  // dimensions or non-finite values.
  static absl::StatusOr<SparseMatrix> FromTriplets(
      int num_rows, int num_cols, std::vector<Triplet> triplets);
  static SparseMatrix FromDense(const Eigen::MatrixXd& dense);
  static SparseMatrix Identity(int n);
  static SparseMatrix Zero(int num_rows, int num_cols);

  // Stacks `top` over `bottom`. Column counts must agree.
  static absl::StatusOr<SparseMatrix> VStack(const SparseMatrix& top,
                                             const SparseMatrix& bottom);
  // Places `left` next to `right`. Row counts must agree.
  static absl::StatusOr<SparseMatrix> HStack(const SparseMatrix& left,
                                             const SparseMatrix& right);

  int rows() const { return num_rows_; }
  int cols() const { return num_cols_; }
  int64_t nnz() const { return static_cast<int64_t>(values_.size()); }

  std::span<const int64_t> row_offsets() const { return row_offsets_; }
  std::span<const int> col_indices() const { return col_indices_; }
  std::span<const double> values() const { return values_; }

  std::span<const int> RowIndices(int row) const;
  std::span<const double> RowValues(int row) const;

  Eigen::MatrixXd ToDense() const;
  std::vector<Triplet> ToTriplets() const;

  // Returns diag(row_scale) * A * diag(col_scale). Zero scale factors would
  // create explicit zeros; they are pruned.
  SparseMatrix Scaled(const Eigen::VectorXd& row_scale,
                      const Eigen::VectorXd& col_scale) const;
  SparseMatrix Transposed() const;
  SparseMatrix Negated() const;
  // Keeps the listed rows (columns) in the given order.
  SparseMatrix SelectRows(std::span<const int> rows) const;
  SparseMatrix SelectColumns(std::span<const int> cols) const;

  // Same sparsity pattern, values replaced. `values.size()` must equal nnz().
  // Values that are exactly zero are pruned.
  SparseMatrix WithValues(const std::vector<double>& values) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

 private:
  int num_rows_ = 0;
  int num_cols_ = 0;
  std::vector<int64_t> row_offsets_ = {0};
  std::vector<int> col_indices_;
  std::vector<double> values_;
};

// y = A x. Summation follows row-major storage order.
absl::StatusOr<Eigen::VectorXd> Multiply(const SparseMatrix& a,
                                         const Eigen::VectorXd& x);
// x = Aᵀ y, computed by scattering over the rows of A.
absl::StatusOr<Eigen::VectorXd> MultiplyTranspose(const SparseMatrix& a,
                                                  const Eigen::VectorXd& y);

// Unchecked kernels for inner loops. `out` is resized as needed.
void MultiplyInto(const SparseMatrix& a, const Eigen::VectorXd& x,
                  Eigen::VectorXd& out);
void MultiplyTransposeInto(const SparseMatrix& a, const Eigen::VectorXd& y,
                           Eigen::VectorXd& out);

struct PowerIterationOptions {
  double rel_tol = 1e-4;
  int max_iter = 5000;
  uint64_t seed = 0;
};

struct SpectralNormEstimate {
  // A lower bound on ‖A‖₂ (the norm of A applied to a unit vector).
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  // `value * (1 + rel_tol)`, the upper estimate used to pick step sizes.
  double safe_upper = 0.0;
};

// Power iteration on AᵀA from a seeded Gaussian start. Stops when the
// eigen-residual ‖AᵀAv − λv‖ is at most rel_tol·λ.
SpectralNormEstimate EstimateSpectralNorm(
    const SparseMatrix& a, const PowerIterationOptions& options = {});

double FrobeniusNorm(const SparseMatrix& a);

}  // namespace pdhg

#endif  // PDHG_SPARSE_MATRIX_H_
