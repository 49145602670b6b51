// Copyright 2026 The pfpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The oracles are only useful if they are right, so they get their own
// checks against values small enough to verify by hand.

#include <gtest/gtest.h>

#include "support/oracles.h"

namespace pfpower::oracle {
namespace {

TEST(OracleTest, BellNumbers) {
  const std::vector<std::int64_t> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
    EXPECT_EQ(Bell(n), expected[n]) << n;
  }
}

TEST(OracleTest, PartitionsOfThree) {
  EXPECT_EQ(AllPartitions(3).size(), 5u);
  EXPECT_EQ(AllEmbeddedCoalitions(3).size(), 10u);
}

TEST(OracleTest, InclusionByHand) {
  // ({0};{0}|{1,2,3}) below ({0,1};{0,1}|{2,3}).
  const Ec low{0b0001, {0b0001, 0b1110}};
  const Ec high{0b0011, {0b0011, 0b1100}};
  EXPECT_TRUE(Included(low, high));
  EXPECT_FALSE(Included(high, low));
}

TEST(OracleTest, MinimalWinningOfDominantPlayer) {
  const std::vector<std::int64_t> w{2, 1, 1};
  const auto m = MinimalWinning(3, [&](const Ec& e) {
    return PluralityWins(w, {0, 0, 0}, TieRule::kTiesLose, e);
  });
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].active, 0b001u);
  EXPECT_TRUE(SamePartition(m[0].blocks, {0b001, 0b010, 0b100}));
}

TEST(OracleTest, MinimalWinningCoalitionsOfWeightedGame) {
  EXPECT_EQ(MinimalWinningCoalitions({2, 1, 1}, 3),
            (std::vector<Mask>{0b011, 0b101}));
}

TEST(OracleTest, IndicesByHand) {
  const std::vector<Mask> m{0b011, 0b101};
  EXPECT_EQ(DeeganPackel(3, m),
            (std::vector<Rational>{Rational(1, 2), Rational(1, 4),
                                   Rational(1, 4)}));
  EXPECT_EQ(ColomerMartinez({2, 1, 1}, m),
            (std::vector<Rational>{Rational(2, 3), Rational(1, 6),
                                   Rational(1, 6)}));
  EXPECT_EQ(HollerColomerMartinez({2, 1, 1}, m),
            (std::vector<Rational>{Rational(2, 3), Rational(1, 6),
                                   Rational(1, 6)}));
}

}  // namespace
}  // namespace pfpower::oracle
