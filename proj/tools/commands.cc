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


#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "instance_spec.h"
#include "pdhg/identification.h"
#include "pdhg/instances.h"
#include "pdhg/iterate_log.h"
#include "pdhg/lp.h"
#include "pdhg/lp_systems.h"
#include "pdhg/pdhg.h"
#include "pdhg/projection.h"
#include "pdhg/sharpness.h"
#include "svg_plot.h"

namespace pdhg::tools {
namespace {

struct SolverFlags {
  double tol = 1e-8;
  double max_iters = 300000;
  double step_scale = 0.5;
  bool no_precondition = false;
  uint64_t seed = 0;
  int64_t log_every = 0;  // 0: unset.
};

// house-sweep passes with_no_precondition = false: it is unpreconditioned by
// default and has its own --precondition flag.
void AddSolverFlags(CLI::App* app, SolverFlags* flags,
                    bool with_no_precondition = true) {
  app->add_option("--tol", flags->tol, "KKT residual tolerance")
      ->capture_default_str();
  app->add_option("--max-iters", flags->max_iters, "iteration limit")
      ->capture_default_str();
  app->add_option("--step-scale", flags->step_scale,
                  "step size as a fraction of 1/||A||")
      ->capture_default_str();
  if (with_no_precondition) {
    app->add_flag("--no-precondition", flags->no_precondition,
                  "disable diagonal preconditioning");
  }
  app->add_option("--seed", flags->seed, "random seed")->capture_default_str();
  app->add_option("--log-every", flags->log_every,
                  "logging cadence; overrides PDHG_LOG_EVERY");
}

absl::StatusOr<int64_t> LogCadence(int64_t flag_value, int64_t fallback) {
  if (flag_value != 0) {
    if (flag_value < 0) {
      return absl::InvalidArgumentError("--log-every must be positive");
    }
    return flag_value;
  }
  if (const char* env = std::getenv("PDHG_LOG_EVERY"); env != nullptr) {
    double value;
    if (!absl::SimpleAtod(env, &value) || value < 1 ||
        value != std::floor(value)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "PDHG_LOG_EVERY must be a positive integer, got '", env, "'"));
    }
    return static_cast<int64_t>(value);
  }
  return fallback;
}

absl::StatusOr<SolverConfig> MakeConfig(const SolverFlags& flags,
                                        const LoadedInstance& instance,
                                        int64_t default_log_every) {
  if (!(flags.max_iters >= 0) || flags.max_iters != std::floor(flags.max_iters)) {
    return absl::InvalidArgumentError(
        absl::StrCat("--max-iters must be a non-negative integer, got ",
                     flags.max_iters));
  }
  if (!(flags.tol > 0)) {
    return absl::InvalidArgumentError("--tol must be positive");
  }
  if (!(flags.step_scale > 0)) {
    return absl::InvalidArgumentError("--step-scale must be positive");
  }
  absl::StatusOr<int64_t> cadence =
      LogCadence(flags.log_every, default_log_every);
  if (!cadence.ok()) return cadence.status();
  SolverConfig config;
  config.kkt_tol = flags.tol;
  config.max_iters = static_cast<int64_t>(flags.max_iters);
  config.step_scale = flags.step_scale;
  config.precondition = !flags.no_precondition;
  config.seed = flags.seed;
  config.log_every = *cadence;
  config.initial_point = instance.initial_point;
  return config;
}

int ExitCodeFor(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return kExitOk;
    case SolveStatus::kIterationLimit:
      return kExitIterationLimit;
    case SolveStatus::kNumericalError:
      return kExitError;
  }
  return kExitError;
}

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
  return kExitError;
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) return absl::UnavailableError(absl::StrCat("cannot open ", path));
  file << text;
  file.close();
  if (!file) return absl::DataLossError(absl::StrCat("failed writing ", path));
  return absl::OkStatus();
}

absl::Status EnsureDirectory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create directory ", dir, ": ", ec.message()));
  }
  return absl::OkStatus();
}

PlotSeries KktSeries(const IterateLog& log, std::string label) {
  PlotSeries series;
  series.label = std::move(label);
  for (const IterateRecord& record : log.records) {
    series.x.push_back(static_cast<double>(record.iteration));
    series.y.push_back(record.kkt);
  }
  return series;
}

std::string SolveSummary(const GeneralLp& lp, const SolveResult& result) {
  return absl::StrFormat(
      "status: %s\niterations: %d\nfinal_kkt: %.6e\n"
      "primal_objective: %.12g\ndual_objective: %.12g\n",
      SolveStatusName(result.status), result.iterations, result.final_kkt,
      PrimalObjective(lp, result.z_final.x),
      DualObjective(lp, result.z_final.y));
}

std::string IndexList(const std::vector<int>& indices) {
  return absl::StrCat("[", absl::StrJoin(indices, ","), "]");
}

std::string PartitionSummary(const Partition& partition) {
  return absl::StrCat("N: ", IndexList(partition.nonbasic), "\nB1: ",
                      IndexList(partition.basic_strict), "\nB2: ",
                      IndexList(partition.basic_degenerate), "\n");
}

// True when an iteration-limited run reduced its KKT residual by less than
// a factor of two over the second half of its log.
bool Stagnated(const SolveResult& result) {
  if (result.status != SolveStatus::kIterationLimit) return false;
  const std::vector<IterateRecord>& records = result.log.records;
  if (records.size() < 4) return false;
  const int64_t half = records.back().iteration / 2;
  auto mid = std::lower_bound(
      records.begin(), records.end(), half,
      [](const IterateRecord& r, int64_t k) { return r.iteration < k; });
  return records.back().kkt > 0.5 * mid->kkt;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string instance;
  SolverFlags solver;
  std::string log_path;
};

int RunSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  absl::StatusOr<LoadedInstance> instance = LoadInstance(args.instance);
  if (!instance.ok()) return Fail(err, instance.status());
  absl::StatusOr<SolverConfig> config =
      MakeConfig(args.solver, *instance, /*default_log_every=*/10);
  if (!config.ok()) return Fail(err, config.status());
  config->fill_distance_to_final = !args.log_path.empty();
  absl::StatusOr<SolveResult> result = Solve(instance->lp, *config);
  if (!result.ok()) return Fail(err, result.status());
  out << "instance: " << instance->label << "\n"
      << SolveSummary(instance->lp, *result);
  if (!args.log_path.empty()) {
    if (absl::Status s = result->log.WriteCsvFile(args.log_path); !s.ok()) {
      return Fail(err, s);
    }
  }
  return ExitCodeFor(result->status);
}

// ------------------------------------------------------------ two-stage

struct TwoStageArgs {
  std::string instance;
  SolverFlags solver{.tol = 1e-10};
  std::string log_path;
  std::string report_path;
  std::string plot_path;
  bool no_timestamp = false;
};

int RunTwoStage(const TwoStageArgs& args, std::ostream& out,
                std::ostream& err) {
  absl::StatusOr<LoadedInstance> instance = LoadInstance(args.instance);
  if (!instance.ok()) return Fail(err, instance.status());
  absl::StatusOr<SolverConfig> config =
      MakeConfig(args.solver, *instance, /*default_log_every=*/1);
  if (!config.ok()) return Fail(err, config.status());
  config->fill_distance_to_final = !args.log_path.empty();
  absl::StatusOr<SolveResult> result = Solve(instance->lp, *config);
  if (!result.ok()) return Fail(err, result.status());
  const PrimalDualPoint z0 = instance->initial_point.value_or(
      PrimalDualPoint::Zero(instance->lp.num_vars(), instance->lp.num_rows()));
  absl::StatusOr<TwoStageAnalysis> analysis = AnalyzeTwoStage(
      instance->lp, z0, *result, {.partition_tol = config->mask_tol});
  if (!analysis.ok()) return Fail(err, analysis.status());

  std::string report = absl::StrCat("instance: ", instance->label, "\n",
                                    SolveSummary(instance->lp, *result),
                                    PartitionSummary(analysis->partition),
                                    FormatReport(analysis->report));
  if (analysis->active_cone.has_value()) {
    absl::StrAppend(&report, "[active_cone]\n",
                    FormatReport(*analysis->active_cone));
  } else {
    absl::StrAppend(&report, "[active_cone]\nskipped: system too large\n");
  }
  if (analysis->local_cone.has_value()) {
    absl::StrAppend(&report, "[local_cone]\n",
                    FormatReport(*analysis->local_cone));
  } else {
    absl::StrAppend(&report, "[local_cone]\nskipped\n");
  }
  out << report;
  if (!args.report_path.empty()) {
    if (absl::Status s = WriteTextFile(args.report_path, report); !s.ok()) {
      return Fail(err, s);
    }
  }
  if (!args.log_path.empty()) {
    if (absl::Status s = result->log.WriteCsvFile(args.log_path); !s.ok()) {
      return Fail(err, s);
    }
  }
  if (!args.plot_path.empty()) {
    PlotOptions plot;
    plot.title = instance->label;
    plot.timestamp = !args.no_timestamp;
    if (analysis->report.empirical_iter.has_value()) {
      plot.markers.push_back(
          {static_cast<double>(*analysis->report.empirical_iter),
           "identification"});
    }
    const std::string svg =
        RenderLogPlot({KktSeries(result->log, "KKT residual")}, plot);
    if (absl::Status s = WriteTextFile(args.plot_path, svg); !s.ok()) {
      return Fail(err, s);
    }
  }
  return ExitCodeFor(result->status);
}

// ---------------------------------------------------------- house-sweep

struct HouseSweepArgs {
  std::vector<double> kappas = {0.9, 0.5};
  std::vector<double> deltas = {0.1, 0.01, 0.001, 0.0};
  std::string out_dir = ".";
  SolverFlags solver;
  bool precondition = false;
  bool no_timestamp = false;
};

int RunHouseSweep(const HouseSweepArgs& args, std::ostream& out,
                  std::ostream& err) {
  if (absl::Status s = EnsureDirectory(args.out_dir); !s.ok()) {
    return Fail(err, s);
  }
  SolverFlags flags = args.solver;
  flags.no_precondition = !args.precondition;
  int exit_code = kExitOk;
  for (double kappa : args.kappas) {
    std::vector<PlotSeries> curves;
    PlotOptions plot;
    plot.title = absl::StrFormat("house, kappa = %g", kappa);
    plot.timestamp = !args.no_timestamp;
    for (double delta : args.deltas) {
      absl::StatusOr<LoadedInstance> instance = LoadInstance(
          absl::StrFormat("builtin:house?kappa=%.17g&delta=%.17g", kappa,
                          delta));
      if (!instance.ok()) return Fail(err, instance.status());
      absl::StatusOr<SolverConfig> config =
          MakeConfig(flags, *instance, /*default_log_every=*/1);
      if (!config.ok()) return Fail(err, config.status());
      absl::StatusOr<SolveResult> result = Solve(instance->lp, *config);
      if (!result.ok()) return Fail(err, result.status());
      absl::StatusOr<TwoStageAnalysis> analysis = AnalyzeTwoStage(
          instance->lp,
          PrimalDualPoint::Zero(instance->lp.num_vars(),
                                instance->lp.num_rows()),
          *result,
          {.partition_tol = config->mask_tol, .compute_sharpness = false});
      if (!analysis.ok()) return Fail(err, analysis.status());
      const std::optional<int64_t> moment = analysis->report.empirical_iter;

      const std::string csv = (std::filesystem::path(args.out_dir) /
                               absl::StrFormat("house_kappa%g_delta%g.csv",
                                               kappa, delta))
                                  .string();
      if (absl::Status s = result->log.WriteCsvFile(csv); !s.ok()) {
        return Fail(err, s);
      }
      out << absl::StrFormat(
          "kappa=%g delta=%g status=%s iterations=%d final_kkt=%.3e "
          "identification=%s csv=%s\n",
          kappa, delta, SolveStatusName(result->status), result->iterations,
          result->final_kkt,
          moment.has_value() ? absl::StrCat(*moment) : std::string("none"),
          csv);
      curves.push_back(
          KktSeries(result->log, absl::StrFormat("delta = %g", delta)));
      exit_code = std::max(exit_code, ExitCodeFor(result->status));
    }
    const std::string svg = (std::filesystem::path(args.out_dir) /
                             absl::StrFormat("house_kappa%g.svg", kappa))
                                .string();
    if (absl::Status s = WriteTextFile(svg, RenderLogPlot(curves, plot));
        !s.ok()) {
      return Fail(err, s);
    }
  }
  return exit_code;
}

// ------------------------------------------------------ perturb-compare

struct PerturbArgs {
  std::string instance;
  double sigma = 1e-6;
  std::string out_dir = ".";
  SolverFlags solver;
  bool no_timestamp = false;
};

int RunPerturbCompare(const PerturbArgs& args, std::ostream& out,
                      std::ostream& err) {
  if (!(args.sigma >= 0)) {
    return Fail(err, absl::InvalidArgumentError("--sigma must be >= 0"));
  }
  absl::StatusOr<LoadedInstance> instance = LoadInstance(args.instance);
  if (!instance.ok()) return Fail(err, instance.status());
  absl::StatusOr<GeneralLp> perturbed =
      Perturb(instance->lp, args.sigma, args.solver.seed);
  if (!perturbed.ok()) return Fail(err, perturbed.status());
  absl::StatusOr<SolverConfig> config =
      MakeConfig(args.solver, *instance, /*default_log_every=*/100);
  if (!config.ok()) return Fail(err, config.status());
  if (absl::Status s = EnsureDirectory(args.out_dir); !s.ok()) {
    return Fail(err, s);
  }

  absl::StatusOr<SolveResult> original = Solve(instance->lp, *config);
  if (!original.ok()) return Fail(err, original.status());
  absl::StatusOr<SolveResult> noisy = Solve(*perturbed, *config);
  if (!noisy.ok()) return Fail(err, noisy.status());

  const std::filesystem::path dir(args.out_dir);
  for (const auto& [name, result] :
       {std::pair{"original.csv", &*original},
        std::pair{"perturbed.csv", &*noisy}}) {
    if (absl::Status s = result->log.WriteCsvFile((dir / name).string());
        !s.ok()) {
      return Fail(err, s);
    }
  }
  PlotOptions plot;
  plot.title = absl::StrFormat("%s, sigma = %g", instance->label, args.sigma);
  plot.timestamp = !args.no_timestamp;
  const std::string svg = RenderLogPlot(
      {KktSeries(original->log, "original"),
       KktSeries(noisy->log, "perturbed")},
      plot);
  if (absl::Status s = WriteTextFile((dir / "compare.svg").string(), svg);
      !s.ok()) {
    return Fail(err, s);
  }

  out << absl::StrFormat(
      "instance: %s\nsigma: %g\noriginal_status: %s\noriginal_iterations: %d\n"
      "original_final_kkt: %.6e\nperturbed_status: %s\n"
      "perturbed_iterations: %d\nperturbed_final_kkt: %.6e\n",
      instance->label, args.sigma, SolveStatusName(original->status),
      original->iterations, original->final_kkt,
      SolveStatusName(noisy->status), noisy->iterations, noisy->final_kkt);
  if (Stagnated(*noisy)) {
    err << absl::StrFormat(
        "perturbed instance stagnated at KKT residual %.3e after %d "
        "iterations; possibly infeasible\n",
        noisy->final_kkt, noisy->iterations);
    return kExitStagnation;
  }
  return std::max(ExitCodeFor(original->status), ExitCodeFor(noisy->status));
}

// ------------------------------------------------------------ sharpness

struct SharpnessArgs {
  std::string instance;
  SolverFlags solver{.tol = 1e-10};
  int brute_force_limit = 10;
  int max_probe_dim = 200;
  int max_cone_size = 60;
};

std::vector<Eigen::VectorXd> SharpnessProbes(const Eigen::VectorXd& center,
                                             const LoadedInstance& instance,
                                             uint64_t seed) {
  std::vector<Eigen::VectorXd> probes;
  const int dim = static_cast<int>(center.size());
  for (int i = 0; i < dim; ++i) {
    for (double t = 1e-2; t <= 1e8; t *= 100.0) {
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd p = center;
        p[i] += sign * t;
        probes.push_back(std::move(p));
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (double scale : {1e-2, 1.0, 1e2}) {
    for (int k = 0; k < 10; ++k) {
      Eigen::VectorXd p = center;
      for (int i = 0; i < dim; ++i) p[i] += scale * normal(rng);
      probes.push_back(std::move(p));
    }
  }
  for (const Eigen::VectorXd& extra : instance.extra_probes) {
    if (extra.size() == dim) probes.push_back(extra);
  }
  return probes;
}

int RunSharpness(const SharpnessArgs& args, std::ostream& out,
                 std::ostream& err) {
  absl::StatusOr<LoadedInstance> instance = LoadInstance(args.instance);
  if (!instance.ok()) return Fail(err, instance.status());
  absl::StatusOr<SolverConfig> config =
      MakeConfig(args.solver, *instance, /*default_log_every=*/1);
  if (!config.ok()) return Fail(err, config.status());
  config->fill_distance_to_final = false;
  absl::StatusOr<SolveResult> result = Solve(instance->lp, *config);
  if (!result.ok()) return Fail(err, result.status());
  const PrimalDualPoint z0 = instance->initial_point.value_or(
      PrimalDualPoint::Zero(instance->lp.num_vars(), instance->lp.num_rows()));

  TwoStageOptions options{.partition_tol = config->mask_tol};
  options.max_sharpness_size = args.max_cone_size;
  options.sharpness.seed = args.solver.seed;
  absl::StatusOr<TwoStageAnalysis> analysis =
      AnalyzeTwoStage(instance->lp, z0, *result, options);
  if (!analysis.ok()) return Fail(err, analysis.status());
  const IdentificationReport& report = analysis->report;

  out << "instance: " << instance->label << "\n"
      << SolveSummary(instance->lp, *result);

  const StandardForm standard = ToStandardForm(instance->lp);
  const PrimalDualPoint z_std =
      standard.map.ToStandard(instance->lp, result->z_final);
  const double radius = report.radius > 0.0 ? report.radius : 1.0;
  absl::StatusOr<PolyhedralSystem> kkt = BuildKktSystem(standard.lp, radius);
  if (!kkt.ok()) return Fail(err, kkt.status());
  const int dim = kkt->num_vars();
  if (dim <= args.max_probe_dim) {
    const std::vector<Eigen::VectorXd> probes =
        SharpnessProbes(z_std.Stacked(), *instance, args.solver.seed);
    absl::StatusOr<double> empirical = EmpiricalSharpness(*kkt, probes);
    if (empirical.ok()) {
      out << absl::StrFormat("alpha_empirical_upper: %.10g probes: %d\n",
                             *empirical, probes.size());
    } else {
      out << "alpha_empirical_upper: unavailable (" << empirical.status().message()
          << ")\n";
    }
  } else {
    out << absl::StrFormat(
        "alpha_empirical_upper: skipped (%d variables > %d)\n", dim,
        args.max_probe_dim);
  }
  absl::StatusOr<double> brute = HoffmanBruteForce(*kkt, args.brute_force_limit);
  if (brute.ok()) {
    out << absl::StrFormat("alpha_brute_force: %.10g\n", *brute);
  } else {
    out << "alpha_brute_force: skipped (" << brute.status().message() << ")\n";
  }
  if (analysis->active_cone.has_value()) {
    out << absl::StrFormat("alpha_L1_lower: %.10g certified: %s\n",
                           report.alpha_l1_lower,
                           report.alpha_l1_certified ? "true" : "false");
  } else {
    out << "alpha_L1_lower: skipped (system too large)\n";
  }
  if (analysis->local_cone.has_value()) {
    out << absl::StrFormat("alpha_L2_lower: %.10g certified: %s\n",
                           report.alpha_l2_lower,
                           report.alpha_l2_certified ? "true" : "false");
  } else {
    out << "alpha_L2_lower: skipped\n";
  }
  out << absl::StrFormat("delta: %.10g\n", report.delta.value);
  if (analysis->active_cone.has_value()) {
    out << "[active_cone]\n" << FormatReport(*analysis->active_cone);
  }
  if (analysis->local_cone.has_value()) {
    out << "[local_cone]\n" << FormatReport(*analysis->local_cone);
  }
  return ExitCodeFor(result->status);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Primal-dual hybrid gradient LP solver and diagnostics",
               "pdhg"};
  app.require_subcommand(1);
  constexpr const char* kInstanceHelp =
      "MPS file or builtin:name?key=value&... (house, nonunique-dual, random)";

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("instance", solve.instance, kInstanceHelp)->required();
  AddSolverFlags(solve_cmd, &solve.solver);
  solve_cmd->add_option("--log", solve.log_path, "iterate log CSV");

  TwoStageArgs two_stage;
  CLI::App* two_stage_cmd = app.add_subcommand(
      "two-stage", "solve and report active-set identification");
  two_stage_cmd->add_option("instance", two_stage.instance, kInstanceHelp)
      ->required();
  AddSolverFlags(two_stage_cmd, &two_stage.solver);
  two_stage_cmd->add_option("--log", two_stage.log_path, "iterate log CSV");
  two_stage_cmd->add_option("--report", two_stage.report_path, "report file");
  two_stage_cmd->add_option("--plot", two_stage.plot_path, "SVG plot");
  two_stage_cmd->add_flag("--no-timestamp", two_stage.no_timestamp,
                          "omit the timestamp comment from SVG output");

  HouseSweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "house-sweep", "solve house instances over a grid of kappa and delta");
  sweep_cmd->add_option("--kappas", sweep.kappas)
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--deltas", sweep.deltas)
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out_dir, "output directory");
  AddSolverFlags(sweep_cmd, &sweep.solver, /*with_no_precondition=*/false);
  sweep_cmd->add_flag("--precondition", sweep.precondition,
                      "enable diagonal preconditioning (off by default)");
  sweep_cmd->add_flag("--no-timestamp", sweep.no_timestamp,
                      "omit the timestamp comment from SVG output");

  PerturbArgs perturb;
  CLI::App* perturb_cmd = app.add_subcommand(
      "perturb-compare", "compare an instance with a noisy copy");
  perturb_cmd->add_option("instance", perturb.instance, kInstanceHelp)
      ->required();
  perturb_cmd->add_option("--sigma", perturb.sigma, "noise standard deviation")
      ->capture_default_str();
  perturb_cmd->add_option("--out", perturb.out_dir, "output directory");
  AddSolverFlags(perturb_cmd, &perturb.solver);
  perturb_cmd->add_flag("--no-timestamp", perturb.no_timestamp,
                        "omit the timestamp comment from SVG output");

  SharpnessArgs sharpness;
  CLI::App* sharpness_cmd = app.add_subcommand(
      "sharpness", "sharpness estimates and bounds at the computed optimum");
  sharpness_cmd->add_option("instance", sharpness.instance, kInstanceHelp)
      ->required();
  AddSolverFlags(sharpness_cmd, &sharpness.solver);
  sharpness_cmd->add_option("--brute-force-limit", sharpness.brute_force_limit,
                            "largest rows + columns for exact enumeration")
      ->capture_default_str();
  sharpness_cmd->add_option("--max-probe-dim", sharpness.max_probe_dim,
                            "largest KKT system for probe estimates")
      ->capture_default_str();
  sharpness_cmd->add_option("--max-cone-size", sharpness.max_cone_size,
                            "largest cone system for certified bounds")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  if (solve_cmd->parsed()) return RunSolve(solve, out, err);
  if (two_stage_cmd->parsed()) return RunTwoStage(two_stage, out, err);
  if (sweep_cmd->parsed()) return RunHouseSweep(sweep, out, err);
  if (perturb_cmd->parsed()) return RunPerturbCompare(perturb, out, err);
  if (sharpness_cmd->parsed()) return RunSharpness(sharpness, out, err);
  return kExitError;
}

}  // namespace pdhg::tools
