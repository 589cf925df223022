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


// Helpers shared by the unit tests.

#ifndef PDHG_TESTS_TEST_UTIL_H_
#define PDHG_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "gtest/gtest.h"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"

#define PDHG_CONCAT_INNER(a, b) a##b
#define PDHG_CONCAT(a, b) PDHG_CONCAT_INNER(a, b)

// Evaluates a StatusOr expression, fails the test on error, otherwise moves
// the value into lhs.
#define ASSERT_OK_AND_ASSIGN(lhs, expr)                                   \
  auto PDHG_CONCAT(status_or_, __LINE__) = (expr);                        \
  ASSERT_TRUE(PDHG_CONCAT(status_or_, __LINE__).ok())                     \
      << PDHG_CONCAT(status_or_, __LINE__).status();                      \
  lhs = std::move(PDHG_CONCAT(status_or_, __LINE__)).value()

#define ASSERT_OK(expr)                         \
  do {                                          \
    const absl::Status status_ = (expr);        \
    ASSERT_TRUE(status_.ok()) << status_;       \
  } while (0)

namespace pdhg::testing {

inline Eigen::MatrixXd Dense(std::initializer_list<std::initializer_list<double>> rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Eigen::MatrixXd out(m, n);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

inline Eigen::VectorXd Vec(std::initializer_list<double> values) {
  Eigen::VectorXd out(values.size());
  int i = 0;
  for (double v : values) out[i++] = v;
  return out;
}

// Random sparse matrix with roughly `density` nonzeros per entry.
inline Eigen::MatrixXd RandomSparseDense(int m, int n, double density,
                                         std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (unit(rng) < density) out(i, j) = normal(rng);
    }
  }
  return out;
}

inline Eigen::VectorXd RandomVector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) out[i] = normal(rng);
  return out;
}

inline StandardLp MakeStandardLp(const Eigen::MatrixXd& a,
                                 const Eigen::VectorXd& b,
                                 const Eigen::VectorXd& c) {
  return StandardLp{SparseMatrix::FromDense(a), b, c};
}

inline PrimalDualPoint Point(const Eigen::VectorXd& x,
                             const Eigen::VectorXd& y) {
  return PrimalDualPoint{x, y};
}

}  // namespace pdhg::testing

#endif  // PDHG_TESTS_TEST_UTIL_H_
