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

#include "pdhg/sparse_matrix.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

namespace pdhg {

absl::StatusOr<SparseMatrix> SparseMatrix::FromTriplets(
    int num_rows, int num_cols, std::vector<Triplet> triplets) {
  if (num_rows < 0 || num_cols < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("negative dimensions ", num_rows, "x", num_cols));
  }
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= num_rows || t.col < 0 || t.col >= num_cols) {
      return absl::InvalidArgumentError(
          absl::StrCat("entry (", t.row, ", ", t.col,
                       ") outside a ", num_rows, "x", num_cols, " matrix"));
    }
    if (!std::isfinite(t.value)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "non-finite value at (", t.row, ", ", t.col, ")"));
    }
  }
  std::stable_sort(triplets.begin(), triplets.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.row != b.row ? a.row < b.row : a.col < b.col;
                   });
  SparseMatrix m;
  m.num_rows_ = num_rows;
  m.num_cols_ = num_cols;
  m.row_offsets_.assign(num_rows + 1, 0);
  size_t i = 0;
  while (i < triplets.size()) {
    const int row = triplets[i].row;
    const int col = triplets[i].col;
    double sum = 0.0;
    for (; i < triplets.size() && triplets[i].row == row &&
           triplets[i].col == col;
         ++i) {
      sum += triplets[i].value;
    }
    if (sum != 0.0) {
      m.col_indices_.push_back(col);
      m.values_.push_back(sum);
      ++m.row_offsets_[row + 1];
    }
  }
  for (int r = 0; r < num_rows; ++r) {
    m.row_offsets_[r + 1] += m.row_offsets_[r];
  }
  return m;
}

SparseMatrix SparseMatrix::FromDense(const Eigen::MatrixXd& dense) {
  SparseMatrix m;
  m.num_rows_ = static_cast<int>(dense.rows());
  m.num_cols_ = static_cast<int>(dense.cols());
  m.row_offsets_.assign(m.num_rows_ + 1, 0);
  for (int r = 0; r < m.num_rows_; ++r) {
    for (int c = 0; c < m.num_cols_; ++c) {
      if (dense(r, c) != 0.0) {
        m.col_indices_.push_back(c);
        m.values_.push_back(dense(r, c));
      }
    }
    m.row_offsets_[r + 1] = static_cast<int64_t>(m.values_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::Identity(int n) {
  SparseMatrix m;
  m.num_rows_ = n;
  m.num_cols_ = n;
  m.row_offsets_.resize(n + 1);
  m.col_indices_.resize(n);
  m.values_.assign(n, 1.0);
  for (int i = 0; i <= n; ++i) m.row_offsets_[i] = i;
  for (int i = 0; i < n; ++i) m.col_indices_[i] = i;
  return m;
}

SparseMatrix SparseMatrix::Zero(int num_rows, int num_cols) {
  SparseMatrix m;
  m.num_rows_ = num_rows;
  m.num_cols_ = num_cols;
  m.row_offsets_.assign(num_rows + 1, 0);
  return m;
}

absl::StatusOr<SparseMatrix> SparseMatrix::VStack(const SparseMatrix& top,
                                                  const SparseMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    return absl::InvalidArgumentError(
        absl::StrCat("VStack column mismatch: ", top.cols(), " vs ",
                     bottom.cols()));
  }
  SparseMatrix m = top;
  m.num_rows_ = top.rows() + bottom.rows();
  m.col_indices_.insert(m.col_indices_.end(), bottom.col_indices_.begin(),
                        bottom.col_indices_.end());
  m.values_.insert(m.values_.end(), bottom.values_.begin(),
                   bottom.values_.end());
  const int64_t shift = top.nnz();
  for (int r = 1; r <= bottom.rows(); ++r) {
    m.row_offsets_.push_back(bottom.row_offsets_[r] + shift);
  }
  return m;
}

absl::StatusOr<SparseMatrix> SparseMatrix::HStack(const SparseMatrix& left,
                                                  const SparseMatrix& right) {
  if (left.rows() != right.rows()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "HStack row mismatch: ", left.rows(), " vs ", right.rows()));
  }
  SparseMatrix m;
  m.num_rows_ = left.rows();
  m.num_cols_ = left.cols() + right.cols();
  m.row_offsets_.assign(m.num_rows_ + 1, 0);
  m.col_indices_.reserve(left.nnz() + right.nnz());
  m.values_.reserve(left.nnz() + right.nnz());
  for (int r = 0; r < m.num_rows_; ++r) {
    for (int64_t k = left.row_offsets_[r]; k < left.row_offsets_[r + 1]; ++k) {
      m.col_indices_.push_back(left.col_indices_[k]);
      m.values_.push_back(left.values_[k]);
    }
    for (int64_t k = right.row_offsets_[r]; k < right.row_offsets_[r + 1];
         ++k) {
      m.col_indices_.push_back(right.col_indices_[k] + left.cols());
      m.values_.push_back(right.values_[k]);
    }
    m.row_offsets_[r + 1] = static_cast<int64_t>(m.values_.size());
  }
  return m;
}

std::span<const int> SparseMatrix::RowIndices(int row) const {
  return std::span<const int>(col_indices_)
      .subspan(row_offsets_[row], row_offsets_[row + 1] - row_offsets_[row]);
}

std::span<const double> SparseMatrix::RowValues(int row) const {
  return std::span<const double>(values_).subspan(
      row_offsets_[row], row_offsets_[row + 1] - row_offsets_[row]);
}

Eigen::MatrixXd SparseMatrix::ToDense() const {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(num_rows_, num_cols_);
  for (int r = 0; r < num_rows_; ++r) {
    for (int64_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      dense(r, col_indices_[k]) = values_[k];
    }
  }
  return dense;
}

std::vector<Triplet> SparseMatrix::ToTriplets() const {
  std::vector<Triplet> out;
  out.reserve(values_.size());
  for (int r = 0; r < num_rows_; ++r) {
    for (int64_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      out.push_back({r, col_indices_[k], values_[k]});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::Scaled(const Eigen::VectorXd& row_scale,
                                  const Eigen::VectorXd& col_scale) const {
  std::vector<double> scaled(values_.size());
  for (int r = 0; r < num_rows_; ++r) {
    for (int64_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      scaled[k] = row_scale[r] * values_[k] * col_scale[col_indices_[k]];
    }
  }
  return WithValues(scaled);
}

SparseMatrix SparseMatrix::Transposed() const {
  SparseMatrix t;
  t.num_rows_ = num_cols_;
  t.num_cols_ = num_rows_;
  t.row_offsets_.assign(num_cols_ + 1, 0);
  for (int c : col_indices_) ++t.row_offsets_[c + 1];
  for (int c = 0; c < num_cols_; ++c) {
    t.row_offsets_[c + 1] += t.row_offsets_[c];
  }
  t.col_indices_.resize(values_.size());
  t.values_.resize(values_.size());
  std::vector<int64_t> next(t.row_offsets_.begin(), t.row_offsets_.end() - 1);
  for (int r = 0; r < num_rows_; ++r) {
    for (int64_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      const int64_t dest = next[col_indices_[k]]++;
      t.col_indices_[dest] = r;
      t.values_[dest] = values_[k];
    }
  }
  return t;
}

SparseMatrix SparseMatrix::Negated() const {
  SparseMatrix m = *this;
  for (double& v : m.values_) v = -v;
  return m;
}

SparseMatrix SparseMatrix::SelectRows(std::span<const int> rows) const {
  SparseMatrix m;
  m.num_rows_ = static_cast<int>(rows.size());
  m.num_cols_ = num_cols_;
  m.row_offsets_.assign(m.num_rows_ + 1, 0);
  for (int i = 0; i < m.num_rows_; ++i) {
    const int r = rows[i];
    for (int64_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      m.col_indices_.push_back(col_indices_[k]);
      m.values_.push_back(values_[k]);
    }
    m.row_offsets_[i + 1] = static_cast<int64_t>(m.values_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::SelectColumns(std::span<const int> cols) const {
  std::vector<int> new_index(num_cols_, -1);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    new_index[cols[j]] = j;
  }
  SparseMatrix m;
  m.num_rows_ = num_rows_;
  m.num_cols_ = static_cast<int>(cols.size());
  m.row_offsets_.assign(num_rows_ + 1, 0);
  std::vector<std::pair<int, double>> row;
  for (int r = 0; r < num_rows_; ++r) {
    row.clear();
    for (int64_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      if (new_index[col_indices_[k]] >= 0) {
        row.emplace_back(new_index[col_indices_[k]], values_[k]);
      }
    }
    std::sort(row.begin(), row.end());
    for (const auto& [c, v] : row) {
      m.col_indices_.push_back(c);
      m.values_.push_back(v);
    }
    m.row_offsets_[r + 1] = static_cast<int64_t>(m.values_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::WithValues(const std::vector<double>& values) const {
  SparseMatrix m;
  m.num_rows_ = num_rows_;
  m.num_cols_ = num_cols_;
  m.row_offsets_.assign(num_rows_ + 1, 0);
  m.col_indices_.reserve(values_.size());
  m.values_.reserve(values_.size());
  for (int r = 0; r < num_rows_; ++r) {
    for (int64_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      if (values[k] != 0.0) {
        m.col_indices_.push_back(col_indices_[k]);
        m.values_.push_back(values[k]);
      }
    }
    m.row_offsets_[r + 1] = static_cast<int64_t>(m.values_.size());
  }
  return m;
}

void MultiplyInto(const SparseMatrix& a, const Eigen::VectorXd& x,
                  Eigen::VectorXd& out) {
  out.resize(a.rows());
  const auto offsets = a.row_offsets();
  const auto cols = a.col_indices();
  const auto vals = a.values();
  for (int r = 0; r < a.rows(); ++r) {
    double sum = 0.0;
    for (int64_t k = offsets[r]; k < offsets[r + 1]; ++k) {
      sum += vals[k] * x[cols[k]];
    }
    out[r] = sum;
  }
}

void MultiplyTransposeInto(const SparseMatrix& a, const Eigen::VectorXd& y,
                           Eigen::VectorXd& out) {
  out.setZero(a.cols());
  const auto offsets = a.row_offsets();
  const auto cols = a.col_indices();
  const auto vals = a.values();
  for (int r = 0; r < a.rows(); ++r) {
    const double yr = y[r];
    if (yr == 0.0) continue;
    for (int64_t k = offsets[r]; k < offsets[r + 1]; ++k) {
      out[cols[k]] += vals[k] * yr;
    }
  }
}

absl::StatusOr<Eigen::VectorXd> Multiply(const SparseMatrix& a,
                                         const Eigen::VectorXd& x) {
  if (x.size() != a.cols()) {
    return absl::InvalidArgumentError(
        absl::StrCat("matvec: vector of length ", x.size(), " for a ",
                     a.rows(), "x", a.cols(), " matrix"));
  }
  Eigen::VectorXd out;
  MultiplyInto(a, x, out);
  return out;
}

absl::StatusOr<Eigen::VectorXd> MultiplyTranspose(const SparseMatrix& a,
                                                  const Eigen::VectorXd& y) {
  if (y.size() != a.rows()) {
    return absl::InvalidArgumentError(
        absl::StrCat("transpose matvec: vector of length ", y.size(),
                     " for a ", a.rows(), "x", a.cols(), " matrix"));
  }
  Eigen::VectorXd out;
  MultiplyTransposeInto(a, y, out);
  return out;
}

SpectralNormEstimate EstimateSpectralNorm(
    const SparseMatrix& a, const PowerIterationOptions& options) {
  SpectralNormEstimate result;
  if (a.nnz() == 0) {
    result.converged = true;
    return result;
  }
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(a.cols());
  for (int j = 0; j < a.cols(); ++j) v[j] = normal(rng);
  v.normalize();

  Eigen::VectorXd av, w;
  double best = 0.0;
  for (int it = 1; it <= options.max_iter; ++it) {
    MultiplyInto(a, v, av);
    MultiplyTransposeInto(a, av, w);
    const double lambda = av.squaredNorm();
    best = std::max(best, std::sqrt(lambda));
    result.iterations = it;
    const double w_norm = w.norm();
    if (w_norm == 0.0) break;
    if ((w - lambda * v).norm() <= options.rel_tol * lambda) {
      result.converged = true;
      break;
    }
    v = w / w_norm;
  }
  result.value = best;
  result.safe_upper = best * (1.0 + options.rel_tol);
  return result;
}

double FrobeniusNorm(const SparseMatrix& a) {
  double sum = 0.0;
  for (double v : a.values()) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace pdhg
