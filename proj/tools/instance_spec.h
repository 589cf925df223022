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

// Resolves an instance argument: either a path to an MPS file or
// `builtin:<name>?key=value&...` with names
//   house           kappa (0.5), delta (0.1)
//   nonunique-dual  kappa (1e-2), y1 (4): start at x = 0, y = (y1, 0)
//   random          m (20), n (40), degenerate (0), seed (0)

#ifndef PDHG_TOOLS_INSTANCE_SPEC_H_
#define PDHG_TOOLS_INSTANCE_SPEC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "pdhg/lp.h"
#include "pdhg/mps.h"

namespace pdhg::tools {

struct LoadedInstance {
  std::string label;
  GeneralLp lp;
  MpsNames names;
  std::optional<PrimalDualPoint> initial_point;
  // Planted optimum of `random` instances.
  std::optional<PrimalDualPoint> known_optimum;
  // Instance-specific probe points for sharpness estimates on the KKT system
  // of the standard form, stacked as (x, y).
  std::vector<Eigen::VectorXd> extra_probes;
};

absl::StatusOr<LoadedInstance> LoadInstance(std::string_view spec);

}  // namespace pdhg::tools

#endif  // PDHG_TOOLS_INSTANCE_SPEC_H_
