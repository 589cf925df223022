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

#ifndef PDHG_ITERATE_LOG_H_
#define PDHG_ITERATE_LOG_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdhg/lp.h"

namespace pdhg {

// Fixed-size set of variable indices.
class Bitmask {
 public:
  Bitmask() = default;
  explicit Bitmask(int size);
  static Bitmask FromIndices(int size, std::span<const int> indices);
  // Inverse of ToHex. The size must be given because leading zero bits are
  // not recoverable from the string.
  static absl::StatusOr<Bitmask> FromHex(int size, std::string_view hex);

  int size() const { return size_; }
  void Set(int i);
  bool Test(int i) const;
  int Count() const;
  std::span<const uint64_t> words() const { return words_; }

  // Big-endian hex, bit i = index i, ceil(size/4) digits (at least one).
  std::string ToHex() const;

  friend bool operator==(const Bitmask& a, const Bitmask& b) = default;

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

struct IterateRecord {
  int64_t iteration = 0;
  double kkt = 0.0;
  // ‖z^{k+1} − z^k‖_{P_s} in the working (possibly scaled) coordinates.
  double ps_step_norm = 0.0;
  // ‖z^k − z_final‖₂ in original coordinates; filled after the solve.
  double dist_to_final = 0.0;
  double wall_seconds = 0.0;
  // x_i > 0.
  Bitmask primal_support;
  // x_i > tol.
  Bitmask primal_above_tol;
  // (c − Aᵀy)_i > tol·‖A‖₂.
  Bitmask dual_slack_positive;
};

struct IterateLog {
  std::vector<IterateRecord> records;
  // Original-coordinate iterates, one per record, when requested.
  std::vector<PrimalDualPoint> iterates;

  size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
  bool has_masks() const;

  // Columns iter,kkt,ps_step_norm,dist_to_final,active_primal,active_dualslack.
  void WriteCsv(std::ostream& out) const;
  absl::Status WriteCsvFile(const std::string& path) const;
};

inline constexpr std::string_view kIterateLogCsvHeader =
    "iter,kkt,ps_step_norm,dist_to_final,active_primal,active_dualslack";

}  // namespace pdhg

#endif  // PDHG_ITERATE_LOG_H_
