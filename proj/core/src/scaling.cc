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

#include "pdhg/scaling.h"

#include <algorithm>
#include <cmath>

#include "Eigen/Core"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {
namespace {

void RowAndColumnInfNorms(const SparseMatrix& a, Eigen::VectorXd& row_norms,
                          Eigen::VectorXd& col_norms) {
  row_norms.setZero(a.rows());
  col_norms.setZero(a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    const auto cols = a.RowIndices(r);
    const auto vals = a.RowValues(r);
    for (size_t k = 0; k < cols.size(); ++k) {
      const double v = std::abs(vals[k]);
      row_norms[r] = std::max(row_norms[r], v);
      col_norms[cols[k]] = std::max(col_norms[cols[k]], v);
    }
  }
}

void RowAndColumnTwoNorms(const SparseMatrix& a, Eigen::VectorXd& row_norms,
                          Eigen::VectorXd& col_norms) {
  row_norms.setZero(a.rows());
  col_norms.setZero(a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    const auto cols = a.RowIndices(r);
    const auto vals = a.RowValues(r);
    for (size_t k = 0; k < cols.size(); ++k) {
      const double v2 = vals[k] * vals[k];
      row_norms[r] += v2;
      col_norms[cols[k]] += v2;
    }
  }
  row_norms = row_norms.cwiseSqrt();
  col_norms = col_norms.cwiseSqrt();
}

Eigen::VectorXd InverseSqrtOrOne(const Eigen::VectorXd& norms) {
  Eigen::VectorXd out(norms.size());
  for (int i = 0; i < norms.size(); ++i) {
    out[i] = norms[i] > 0.0 ? 1.0 / std::sqrt(norms[i]) : 1.0;
  }
  return out;
}

}  // namespace

ScalingRecord ScalingRecord::Identity(int num_rows, int num_cols) {
  return {Eigen::VectorXd::Ones(num_rows), Eigen::VectorXd::Ones(num_cols)};
}

ScalingRecord ScalingRecord::ComposedWith(const ScalingRecord& next) const {
  return {row_scale.cwiseProduct(next.row_scale),
          col_scale.cwiseProduct(next.col_scale)};
}

ScalingRecord RuizScale(const SparseMatrix& a, int iterations) {
  ScalingRecord record = ScalingRecord::Identity(a.rows(), a.cols());
  SparseMatrix current = a;
  Eigen::VectorXd row_norms, col_norms;
  for (int it = 0; it < iterations; ++it) {
    RowAndColumnInfNorms(current, row_norms, col_norms);
    const Eigen::VectorXd row_factor = InverseSqrtOrOne(row_norms);
    const Eigen::VectorXd col_factor = InverseSqrtOrOne(col_norms);
    record.row_scale = record.row_scale.cwiseProduct(row_factor);
    record.col_scale = record.col_scale.cwiseProduct(col_factor);
    current = current.Scaled(row_factor, col_factor);
  }
  return record;
}

ScalingRecord PockChambolleScale(const SparseMatrix& a) {
  Eigen::VectorXd row_norms, col_norms;
  RowAndColumnTwoNorms(a, row_norms, col_norms);
  return {InverseSqrtOrOne(row_norms), InverseSqrtOrOne(col_norms)};
}

GeneralLp ApplyScaling(const GeneralLp& lp, const ScalingRecord& scaling) {
  const int m_e = lp.num_eq();
  const int m_i = lp.num_ineq();
  GeneralLp out;
  out.a_eq = lp.a_eq.Scaled(scaling.row_scale.head(m_e), scaling.col_scale);
  out.a_ineq =
      lp.a_ineq.Scaled(scaling.row_scale.tail(m_i), scaling.col_scale);
  out.b_eq = lp.b_eq.cwiseProduct(scaling.row_scale.head(m_e));
  out.b_ineq = lp.b_ineq.cwiseProduct(scaling.row_scale.tail(m_i));
  out.c = lp.c.cwiseProduct(scaling.col_scale);
  out.objective_offset = lp.objective_offset;
  return out;
}

PreconditionedLp Precondition(const GeneralLp& lp, int ruiz_iterations) {
  const SparseMatrix a = lp.CombinedMatrix();
  const ScalingRecord ruiz = RuizScale(a, ruiz_iterations);
  const ScalingRecord pock =
      PockChambolleScale(a.Scaled(ruiz.row_scale, ruiz.col_scale));
  PreconditionedLp out;
  out.scaling = ruiz.ComposedWith(pock);
  out.lp = ApplyScaling(lp, out.scaling);
  return out;
}

PrimalDualPoint Unscale(const PrimalDualPoint& scaled,
                        const ScalingRecord& scaling) {
  return {scaled.x.cwiseProduct(scaling.col_scale),
          scaled.y.cwiseProduct(scaling.row_scale)};
}

PrimalDualPoint Scale(const PrimalDualPoint& original,
                      const ScalingRecord& scaling) {
  return {original.x.cwiseQuotient(scaling.col_scale),
          original.y.cwiseQuotient(scaling.row_scale)};
}

}  // namespace pdhg
