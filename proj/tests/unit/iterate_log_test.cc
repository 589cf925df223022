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

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace pdhg {
namespace {

TEST(BitmaskTest, SetTestCount) {
  Bitmask m(70);
  m.Set(0);
  m.Set(65);
  EXPECT_TRUE(m.Test(0));
  EXPECT_TRUE(m.Test(65));
  EXPECT_FALSE(m.Test(64));
  EXPECT_EQ(m.Count(), 2);
  const std::vector<int> idx = {0, 65};
  EXPECT_EQ(Bitmask::FromIndices(70, idx), m);
}

TEST(BitmaskTest, HexIsBigEndianWithFixedWidth) {
  const std::vector<int> idx = {0, 5};
  // Bits 0 and 5 of a 6-bit mask: 0b100001.
  EXPECT_EQ(Bitmask::FromIndices(6, idx).ToHex(), "21");
  EXPECT_EQ(Bitmask(9).ToHex(), "000");
  EXPECT_EQ(Bitmask(0).ToHex(), "0");
  const std::vector<int> high = {8};
  EXPECT_EQ(Bitmask::FromIndices(9, high).ToHex(), "100");
}

TEST(BitmaskTest, HexRoundTrip) {
  const std::vector<int> idx = {1, 2, 3, 63, 64, 99};
  const Bitmask m = Bitmask::FromIndices(100, idx);
  ASSERT_OK_AND_ASSIGN(Bitmask back, Bitmask::FromHex(100, m.ToHex()));
  EXPECT_EQ(back, m);
  EXPECT_FALSE(Bitmask::FromHex(4, "xyz").ok());
  EXPECT_FALSE(Bitmask::FromHex(4, "10").ok());
}

TEST(IterateLogTest, CsvSchema) {
  IterateLog log;
  IterateRecord r;
  r.iteration = 3;
  r.kkt = 0.5;
  r.ps_step_norm = 0.25;
  r.dist_to_final = 2;
  const std::vector<int> support = {1};
  r.primal_support = Bitmask::FromIndices(2, support);
  r.primal_above_tol = r.primal_support;
  r.dual_slack_positive = Bitmask(2);
  log.records.push_back(r);
  EXPECT_TRUE(log.has_masks());
  std::ostringstream out;
  log.WriteCsv(out);
  EXPECT_EQ(out.str(),
            "iter,kkt,ps_step_norm,dist_to_final,active_primal,"
            "active_dualslack\n3,0.5,0.25,2,2,0\n");
}

TEST(IterateLogTest, EmptyLogHasNoMasks) {
  IterateLog log;
  EXPECT_FALSE(log.has_masks());
  IterateRecord r;
  log.records.push_back(r);
  EXPECT_FALSE(log.has_masks());
}

}  // namespace
}  // namespace pdhg
