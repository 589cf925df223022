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

#include "pdhg/iterate_log.h"

#include <bit>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pdhg {

Bitmask::Bitmask(int size) : size_(size), words_((size + 63) / 64, 0) {}

Bitmask Bitmask::FromIndices(int size, std::span<const int> indices) {
  Bitmask mask(size);
  for (int i : indices) mask.Set(i);
  return mask;
}

absl::StatusOr<Bitmask> Bitmask::FromHex(int size, std::string_view hex) {
  Bitmask mask(size);
  const int digits = static_cast<int>(hex.size());
  for (int d = 0; d < digits; ++d) {
    const char ch = hex[digits - 1 - d];
    int nibble;
    if (ch >= '0' && ch <= '9') {
      nibble = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      nibble = ch - 'A' + 10;
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("invalid hex digit '", std::string(1, ch), "'"));
    }
    for (int b = 0; b < 4; ++b) {
      if ((nibble >> b) & 1) {
        const int index = 4 * d + b;
        if (index >= size) {
          return absl::InvalidArgumentError(
              absl::StrCat("bit ", index, " set in a mask of size ", size));
        }
        mask.Set(index);
      }
    }
  }
  return mask;
}

void Bitmask::Set(int i) { words_[i / 64] |= uint64_t{1} << (i % 64); }

bool Bitmask::Test(int i) const { return (words_[i / 64] >> (i % 64)) & 1; }

int Bitmask::Count() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

std::string Bitmask::ToHex() const {
  const int digits = std::max(1, (size_ + 3) / 4);
  std::string out(digits, '0');
  static constexpr char kDigits[] = "0123456789abcdef";
  for (int d = 0; d < digits; ++d) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      const int index = 4 * d + b;
      if (index < size_ && Test(index)) nibble |= 1 << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

bool IterateLog::has_masks() const {
  if (records.empty()) return false;
  for (const IterateRecord& r : records) {
    if (r.primal_support.size() == 0 && r.dual_slack_positive.size() == 0) {
      return false;
    }
  }
  return true;
}

void IterateLog::WriteCsv(std::ostream& out) const {
  out << kIterateLogCsvHeader << "\n";
  for (const IterateRecord& r : records) {
    out << absl::StrFormat("%d,%.17g,%.17g,%.17g,%s,%s\n", r.iteration, r.kkt,
                           r.ps_step_norm, r.dist_to_final,
                           r.primal_support.ToHex(),
                           r.dual_slack_positive.ToHex());
  }
}

absl::Status IterateLog::WriteCsvFile(const std::string& path) const {
  std::ofstream file(path);
  if (!file) {
    return absl::UnavailableError(absl::StrCat("cannot open ", path));
  }
  WriteCsv(file);
  if (!file) {
    return absl::DataLossError(absl::StrCat("failed writing ", path));
  }
  return absl::OkStatus();
}

}  // namespace pdhg
