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

// Free-format MPS reader and writer.
//
// The reader normalizes every model to a GeneralLp (x ≥ 0, equality and ≤
// rows):
//  * G rows are negated into ≤ rows;
//  * a finite lower bound l ≠ 0 is removed by the shift x = l + x';
//  * variables with lower bound −∞ (FR, MI) are split as x = x⁺ − x⁻;
//  * finite upper bounds become ≤ rows appended after the ROWS section rows;
//  * OBJSENSE MAX negates the objective;
//  * an RHS entry on the objective row becomes the constant −value.
// Duplicate (column, row) coefficients are summed. RANGES, BV and SC bounds
// are rejected; integer MARKER lines are ignored with a warning.

#ifndef PDHG_MPS_H_
#define PDHG_MPS_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "pdhg/lp.h"

namespace pdhg {

struct MpsNames {
  std::string problem;
  std::string objective = "obj";
  // One entry per GeneralLp column, row of A_E and row of A_I.
  std::vector<std::string> variables;
  std::vector<std::string> eq_rows;
  std::vector<std::string> ineq_rows;
};

struct MpsModel {
  GeneralLp lp;
  MpsNames names;
  std::vector<std::string> warnings;
};

absl::StatusOr<MpsModel> ParseMps(std::string_view text);
absl::StatusOr<MpsModel> ReadMpsFile(const std::string& path);

// Writes the GeneralLp as-is: no BOUNDS section (all columns x ≥ 0), E and L
// rows only. Numbers use 17 significant digits so a reparse is exact.
// Missing names are generated as C<j>, E<i>, L<i>.
std::string WriteMps(const GeneralLp& lp, const MpsNames* names = nullptr);

}  // namespace pdhg

#endif  // PDHG_MPS_H_
