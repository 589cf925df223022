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


#include <cstdint>
#include <cstdlib>
#include <utility>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "benchmark/benchmark.h"
#include "pdhg/instances.h"
#include "pdhg/lp.h"
#include "pdhg/pdhg.h"
#include "pdhg/ps_metric.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {
namespace {

// Planted instances with m = n/2 rows.
PlantedLp Planted(int n, bool degenerate = false) {
  absl::StatusOr<PlantedLp> planted =
      RandomPlantedLp(n / 2, n, degenerate, /*seed=*/1);
  if (!planted.ok()) std::abort();
  return *std::move(planted);
}

void BM_Multiply(benchmark::State& state) {
  const PlantedLp planted = Planted(static_cast<int>(state.range(0)));
  const SparseMatrix& a = planted.lp.a;
  const Eigen::VectorXd x = Eigen::VectorXd::Ones(a.cols());
  Eigen::VectorXd out;
  for (auto _ : state) {
    MultiplyInto(a, x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * a.nnz());
}
BENCHMARK(BM_Multiply)->Arg(40)->Arg(400)->Arg(4000);

void BM_MultiplyTranspose(benchmark::State& state) {
  const PlantedLp planted = Planted(static_cast<int>(state.range(0)));
  const SparseMatrix& a = planted.lp.a;
  const Eigen::VectorXd y = Eigen::VectorXd::Ones(a.rows());
  Eigen::VectorXd out;
  for (auto _ : state) {
    MultiplyTransposeInto(a, y, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * a.nnz());
}
BENCHMARK(BM_MultiplyTranspose)->Arg(40)->Arg(400)->Arg(4000);

void BM_SpectralNorm(benchmark::State& state) {
  const PlantedLp planted = Planted(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EstimateSpectralNorm(planted.lp.a).safe_upper);
  }
}
BENCHMARK(BM_SpectralNorm)->Arg(40)->Arg(400);

void BM_PdhgStep(benchmark::State& state) {
  const PlantedLp planted = Planted(static_cast<int>(state.range(0)));
  const double s =
      0.5 / EstimateSpectralNorm(planted.lp.a).safe_upper;
  PrimalDualPoint z{Eigen::VectorXd::Zero(planted.lp.num_vars()),
                    Eigen::VectorXd::Zero(planted.lp.num_rows())};
  for (auto _ : state) {
    absl::StatusOr<PrimalDualPoint> next = PdhgStep(planted.lp, z, s);
    if (!next.ok()) std::abort();
    z = *std::move(next);
  }
}
BENCHMARK(BM_PdhgStep)->Arg(40)->Arg(400)->Arg(4000);

void BM_PsInverseNorm(benchmark::State& state) {
  const PlantedLp planted = Planted(static_cast<int>(state.range(0)));
  const double s =
      0.5 / EstimateSpectralNorm(planted.lp.a).safe_upper;
  const PrimalDualPoint g{Eigen::VectorXd::Ones(planted.lp.num_vars()),
                          Eigen::VectorXd::Ones(planted.lp.num_rows())};
  for (auto _ : state) {
    absl::StatusOr<double> v = PsInverseNorm(planted.lp.a, g, s);
    if (!v.ok()) std::abort();
    benchmark::DoNotOptimize(*v);
  }
}
BENCHMARK(BM_PsInverseNorm)->Arg(40)->Arg(400);

void BM_SolveHouse(benchmark::State& state) {
  absl::StatusOr<GeneralLp> house = HouseLp(0.5, 0.1);
  if (!house.ok()) std::abort();
  SolverConfig config;
  config.kkt_tol = 1e-8;
  config.log_every = 64;
  config.fill_distance_to_final = false;
  int64_t iterations = 0;
  for (auto _ : state) {
    absl::StatusOr<SolveResult> result = Solve(*house, config);
    if (!result.ok()) std::abort();
    iterations = result->iterations;
  }
  state.counters["iterations"] = static_cast<double>(iterations);
}
BENCHMARK(BM_SolveHouse)->Unit(benchmark::kMillisecond);

void BM_SolvePlanted(benchmark::State& state) {
  const PlantedLp planted = Planted(static_cast<int>(state.range(0)));
  SolverConfig config;
  config.kkt_tol = 1e-6;
  config.log_every = 64;
  config.fill_distance_to_final = false;
  int64_t iterations = 0;
  for (auto _ : state) {
    absl::StatusOr<SolveResult> result = Solve(planted.lp, config);
    if (!result.ok()) std::abort();
    iterations = result->iterations;
  }
  state.counters["iterations"] = static_cast<double>(iterations);
}
BENCHMARK(BM_SolvePlanted)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pdhg

BENCHMARK_MAIN();
