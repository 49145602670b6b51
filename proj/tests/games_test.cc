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

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "pfpower/enumeration.h"
#include "pfpower/errors.h"
#include "pfpower/fixtures.h"
#include "pfpower/games.h"
#include "support/builders.h"
#include "support/oracles.h"

namespace pfpower {
namespace {

using testing::Ec;
using testing::Lettered;
using testing::Members;
using testing::Plurality;
using testing::Quota;

std::vector<Coalition> Coalitions(std::initializer_list<std::vector<int>> sets) {
  std::vector<Coalition> out;
  for (const auto& s : sets) out.push_back(Coalition::FromMembers(s));
  return out;
}

TEST(IsWinningCharacteristicTest, QuotaReached) {
  const GameSpec spec = Quota({2, 1, 1}, 3);
  EXPECT_TRUE(IsWinningCharacteristic(Coalition::FromMembers({0, 1}), spec));
}

TEST(IsWinningCharacteristicTest, QuotaMissed) {
  const GameSpec spec = Quota({2, 1, 1}, 3);
  EXPECT_FALSE(IsWinningCharacteristic(Coalition::FromMembers({1, 2}), spec));
}

TEST(IsWinningCharacteristicTest, GrandCoalitionAlwaysWins) {
  for (std::int64_t q = 1; q <= 4; ++q) {
    EXPECT_TRUE(IsWinningCharacteristic(Coalition::Full(3), Quota({2, 1, 1}, q)));
  }
}

TEST(IsWinningCharacteristicTest, RejectsPartitionForm) {
  EXPECT_THROW(IsWinningCharacteristic(
                   Coalition(1), Plurality({1, 1}, TieRule::kTiesLose)),
               FormMismatchError);
}

class MayGameTest : public ::testing::Test {
 protected:
  const GameSpec spec_ = FindFixture("may_2021").Spec();
  EmbeddedCoalition E(std::string_view text) const {
    return Ec(text, spec_.table());
  }
};

TEST_F(MayGameTest, TieResolvedByVotes) {
  EXPECT_TRUE(IsWinningEmbedded(
      E("{ID, PSC, IND} | {ID, PSC, IND}, {MUPP, CREO}, {UNES}"), spec_));
}

TEST_F(MayGameTest, TieLostOnVotes) {
  // 49 seats each; 5060922 votes against 5486545.
  EXPECT_FALSE(IsWinningEmbedded(
      E("{UNES} | {ID, PSC, IND}, {MUPP, CREO}, {UNES}"), spec_));
}

TEST_F(MayGameTest, TableDrivenGameAgreesWithDirectRule) {
  const PartitionGame game = PartitionGame::FromSpec(spec_);
  for (const EmbeddedCoalition& ec : EmbeddedCoalitionEnumerator(6)) {
    EXPECT_EQ(game(ec), IsWinningEmbedded(ec, spec_));
  }
}

// The engine's set is checked against the brute-force definition, which
// finds 33 elements under the vote rule.
TEST_F(MayGameTest, MinimalSetMatchesDefinition) {
  const MwcSet set = MinimalWinningEmbeddedCoalitions(spec_);
  const PartitionGame game = PartitionGame::FromSpec(spec_);
  const auto expected = oracle::MinimalWinning(6, [&](const oracle::Ec& e) {
    std::vector<Coalition> blocks;
    for (auto b : e.blocks) blocks.emplace_back(b);
    return game.Evaluate(Coalition(e.active), blocks);
  });
  EXPECT_EQ(set.size(), expected.size());
  EXPECT_EQ(set.size(), 33u);
  for (const oracle::Ec& e : expected) {
    std::vector<Coalition> blocks;
    for (auto b : e.blocks) blocks.emplace_back(b);
    const EmbeddedCoalition ec = EmbeddedCoalition::Make(
        Coalition(e.active), Partition::FromBlocks(6, blocks));
    EXPECT_NE(std::find(set.embedded().begin(), set.embedded().end(), ec),
              set.embedded().end());
  }
}

TEST_F(MayGameTest, ParticipationCounts) {
  const MwcSet set = MinimalWinningEmbeddedCoalitions(spec_);
  EXPECT_EQ(ParticipationCounts(set),
            (std::vector<std::int64_t>{22, 11, 10, 10, 9, 9}));
}

// The published May listing holds a comparable pair, so no game, monotone
// or otherwise, has it as its set of minimal winning embedded coalitions.
TEST_F(MayGameTest, PublishedListingIsNotAnAntichain) {
  const PeriodFixture& fixture = FindFixture("may_2021");
  std::vector<EmbeddedCoalition> listed;
  for (const auto& text : fixture.mwec) listed.push_back(E(text));
  ASSERT_EQ(listed.size(), 34u);
  const EmbeddedCoalition low =
      E("{ID, PSC, IND} | {ID, PSC, IND}, {MUPP, CREO}, {UNES}");
  const EmbeddedCoalition high =
      E("{ID, PSC, CREO, IND} | {ID, PSC, CREO, IND}, {UNES}, {MUPP}");
  EXPECT_TRUE(IsProperEcSubset(low, high));
  EXPECT_NE(std::find(listed.begin(), listed.end(), low), listed.end());
  EXPECT_NE(std::find(listed.begin(), listed.end(), high), listed.end());
  EXPECT_THROW(GameFromAntichain(listed), AntichainViolationError);
}

TEST(IsWinningEmbeddedTest, ThreeWayTieLoses) {
  const GameSpec spec = Plurality({1, 1, 1}, TieRule::kTiesLose);
  EXPECT_FALSE(IsWinningEmbedded(Ec("{a} | {a}, {b}, {c}", spec.table()), spec));
}

TEST(IsWinningEmbeddedTest, ThreeWayTieAllWin) {
  const GameSpec spec = Plurality({1, 1, 1}, TieRule::kTiesAllWin);
  EXPECT_TRUE(IsWinningEmbedded(Ec("{a} | {a}, {b}, {c}", spec.table()), spec));
}

TEST(IsWinningEmbeddedTest, VoteTieMeansNoWinner) {
  const GameSpec spec = Plurality({2, 2}, TieRule::kVotes, {10, 10});
  EXPECT_FALSE(IsWinningEmbedded(Ec("{a} | {a}, {b}", spec.table()), spec));
  EXPECT_FALSE(IsWinningEmbedded(Ec("{b} | {a}, {b}", spec.table()), spec));
}

TEST(IsWinningEmbeddedTest, EmptyActiveLoses) {
  const GameSpec spec = Plurality({1}, TieRule::kTiesAllWin);
  EXPECT_FALSE(IsWinningEmbedded(
      EmbeddedCoalition::Make(Coalition(), Partition::Coarsest(1)), spec));
}

TEST(IsWinningEmbeddedTest, RejectsWrongPlayerCount) {
  const GameSpec spec = Plurality({1, 1, 1}, TieRule::kTiesLose);
  EXPECT_THROW(IsWinningEmbedded(Ec("{a} | {a}, {b}", Lettered({1, 1})), spec),
               MalformedInputError);
}

TEST(MinimalWinningCoalitionsTest, WeightedThreePlayers) {
  EXPECT_EQ(MinimalWinningCoalitions(Quota({2, 1, 1}, 3)).actives(),
            Coalitions({{0, 1}, {0, 2}}));
}

TEST(MinimalWinningCoalitionsTest, SinglePlayer) {
  EXPECT_EQ(MinimalWinningCoalitions(Quota({1}, 1)).actives(),
            Coalitions({{0}}));
}

TEST(MinimalWinningCoalitionsTest, SimpleMajority) {
  EXPECT_EQ(MinimalWinningCoalitions(Quota({1, 1, 1}, 2)).actives(),
            Coalitions({{0, 1}, {0, 2}, {1, 2}}));
}

TEST(MinimalWinningCoalitionsTest, RejectsPartitionForm) {
  EXPECT_THROW(MinimalWinningCoalitions(Plurality({1, 1}, TieRule::kTiesLose)),
               FormMismatchError);
}

TEST(MinimalWinningEmbeddedTest, DominantPlayerAlone) {
  const GameSpec spec = Plurality({2, 1, 1}, TieRule::kTiesLose);
  const MwcSet set = MinimalWinningEmbeddedCoalitions(spec);
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.embedded()[0], Ec("{a} | {a}, {b}, {c}", spec.table()));
}

TEST(MinimalWinningEmbeddedTest, EqualThreePlayersNeedPairs) {
  const GameSpec spec = Plurality({1, 1, 1}, TieRule::kTiesLose);
  const MwcSet set = MinimalWinningEmbeddedCoalitions(spec);
  const PlayerTable& t = spec.table();
  EXPECT_EQ(set.embedded(),
            (std::vector<EmbeddedCoalition>{Ec("{a, b} | {a, b}, {c}", t),
                                            Ec("{a, c} | {a, c}, {b}", t),
                                            Ec("{b, c} | {b, c}, {a}", t)}));
}

TEST(MinimalWinningEmbeddedTest, JuneHasThirtySeven) {
  EXPECT_EQ(
      MinimalWinningEmbeddedCoalitions(FindFixture("jun_2021").Spec()).size(),
      37u);
}

TEST(MinimalWinningEmbeddedTest, ParallelScanIsDeterministic) {
  const GameSpec spec =
      GameSpec(Lettered({9, 7, 7, 5, 4, 3, 3, 2, 1}, {9, 8, 7, 6, 5, 4, 3, 2, 1}),
               PartitionForm{TieRule::kVotes});
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions four;
  four.threads = 4;
  EXPECT_EQ(MinimalWinningEmbeddedCoalitions(spec, one),
            MinimalWinningEmbeddedCoalitions(spec, four));
}

TEST(MinimalWinningEmbeddedTest, PresentationOrder) {
  const MwcSet set =
      MinimalWinningEmbeddedCoalitions(FindFixture("jun_2021").Spec());
  for (std::size_t k = 1; k < set.size(); ++k) {
    EXPECT_TRUE(PresentationLess(set.embedded()[k - 1], set.embedded()[k]));
  }
}

TEST(ParticipationCountsTest, NullPlayerCountsZero) {
  const MwcSet set =
      MinimalWinningEmbeddedCoalitions(Plurality({2, 1, 1}, TieRule::kTiesLose));
  EXPECT_EQ(ParticipationCounts(set), (std::vector<std::int64_t>{1, 0, 0}));
}

TEST(UnanimityTest, Evaluation) {
  const Coalition ab = Coalition::FromMembers({0, 1});
  EXPECT_EQ(UnanimityGameEval(ab, Coalition::Full(3)), 1);
  EXPECT_EQ(UnanimityGameEval(ab, Coalition::Singleton(0)), 0);
  EXPECT_EQ(UnanimityGameEval(ab, ab), 1);
  EXPECT_THROW(UnanimityGameEval(Coalition(), ab), MalformedInputError);
}

TEST(BasisGameTest, Evaluation) {
  const PlayerTable t = testing::Numbered(4);
  const EmbeddedCoalition base = Ec("{1} | {1}, {2, 3, 4}", t);
  EXPECT_EQ(BasisGameEval(base, Ec("{1, 2} | {1, 2}, {3, 4}", t)), 1);
  EXPECT_EQ(BasisGameEval(base, base), 1);
  EXPECT_EQ(BasisGameEval(Ec("{1, 2} | {1, 2}, {3, 4}", t),
                          Ec("{1} | {1}, {2}, {3}, {4}", t)),
            0);
}

TEST(GameFromAntichainTest, OnlyGrandCoalition) {
  const PlayerTable t = Lettered({1, 1, 1});
  const PartitionGame game =
      GameFromAntichain({Ec("{a, b, c} | {a, b, c}", t)});
  int winners = 0;
  for (const EmbeddedCoalition& ec : EmbeddedCoalitionEnumerator(3)) {
    winners += game(ec);
  }
  EXPECT_EQ(winners, 1);
  EXPECT_TRUE(game(Ec("{a, b, c} | {a, b, c}", t)));
}

TEST(GameFromAntichainTest, RoundTripsTheMayGame) {
  const GameSpec spec = FindFixture("may_2021").Spec();
  const MwcSet set = MinimalWinningEmbeddedCoalitions(spec);
  const PartitionGame rebuilt = GameFromAntichain(set.embedded());
  const PartitionGame original = PartitionGame::FromSpec(spec);
  for (const EmbeddedCoalition& ec : EmbeddedCoalitionEnumerator(6)) {
    EXPECT_EQ(rebuilt(ec), original(ec));
  }
  EXPECT_EQ(MinimalWinningEmbeddedCoalitions(rebuilt), set);
}

TEST(GameFromAntichainTest, RejectsComparablePair) {
  const PlayerTable t = Lettered({1, 1, 1});
  try {
    GameFromAntichain(
        {Ec("{a} | {a}, {b}, {c}", t), Ec("{a, b} | {a, b}, {c}", t)});
    FAIL() << "comparable pair accepted";
  } catch (const AntichainViolationError& e) {
    SUCCEED() << e.what();
  }
}

TEST(GameFromAntichainTest, RejectsEmptyInput) {
  EXPECT_THROW(GameFromAntichain({}), MalformedInputError);
}

TEST(IsMonotoneTest, PluralityGamesUnderEveryRule) {
  for (TieRule rule :
       {TieRule::kTiesLose, TieRule::kTiesAllWin, TieRule::kVotes}) {
    EXPECT_TRUE(IsMonotone(PartitionGame::FromSpec(
        Plurality({3, 2, 2, 1}, rule, {4, 7, 7, 1}))));
  }
}

TEST(IsMonotoneTest, AntichainGames) {
  const PlayerTable t = Lettered({1, 1, 1, 1});
  EXPECT_TRUE(IsMonotone(GameFromAntichain(
      {Ec("{a} | {a}, {b, c, d}", t), Ec("{b, c} | {b, c}, {a}, {d}", t)})));
}

TEST(IsMonotoneTest, DetectsViolation) {
  const PlayerTable t = Lettered({1, 1, 1});
  const EmbeddedCoalition low = Ec("{a} | {a}, {b, c}", t);
  const PartitionGame game(
      3, [&](Coalition active, std::span<const Coalition> blocks) {
        return active == low.active &&
               Partition::FromBlocks(3, blocks) == low.partition;
      });
  EXPECT_FALSE(IsMonotone(game));
}

TEST(CharacteristicGameTest, MonotoneAndDecisive) {
  const CharacteristicGame majority =
      CharacteristicGame::FromSpec(Quota({1, 1, 1}, 2));
  EXPECT_TRUE(majority.IsMonotone());
  EXPECT_TRUE(majority.IsDecisive());
  const CharacteristicGame unanimity =
      CharacteristicGame::FromSpec(Quota({1, 1, 1}, 3));
  EXPECT_TRUE(unanimity.IsMonotone());
  EXPECT_FALSE(unanimity.IsDecisive());
  const CharacteristicGame odd = CharacteristicGame::FromPredicate(
      2, [](Coalition c) { return c.size() == 1; });
  EXPECT_FALSE(odd.IsMonotone());
}

TEST(UnionGameTest, Idempotent) {
  const CharacteristicGame v = CharacteristicGame::FromSpec(Quota({2, 1, 1}, 3));
  EXPECT_EQ(UnionGame(v, v), v);
}

TEST(UnionGameTest, UnionOfUnanimityGames) {
  const CharacteristicGame joined =
      UnionGame(CharacteristicGame::Unanimity(3, Coalition::Singleton(0)),
                CharacteristicGame::Unanimity(3, Coalition::Singleton(1)));
  for (Coalition::Mask m = 0; m < 8; ++m) {
    EXPECT_EQ(joined(Coalition(m)), (m & 3u) != 0);
  }
}

TEST(UnionGameTest, MinimalSetsJoinWhenMergeable) {
  const CharacteristicGame a = CharacteristicGame::FromSpec(Quota({2, 1, 1}, 3));
  const CharacteristicGame b = CharacteristicGame::FromSpec(Quota({0, 1, 1}, 2));
  ASSERT_TRUE(IsMergeable(a, b));
  EXPECT_EQ(MinimalWinningCoalitions(UnionGame(a, b)).actives(),
            Coalitions({{0, 1}, {0, 2}, {1, 2}}));
}

TEST(IsMergeableTest, Examples) {
  const auto u = [](std::vector<int> s) {
    return CharacteristicGame::Unanimity(3, Coalition::FromMembers(s));
  };
  EXPECT_TRUE(IsMergeable(u({0, 1}), u({0, 2})));
  EXPECT_FALSE(IsMergeable(u({0}), u({0, 1})));
  EXPECT_TRUE(IsMergeable(CharacteristicGame::FromSpec(Quota({2, 1, 1}, 3)),
                          CharacteristicGame::FromSpec(Quota({0, 1, 1}, 2))));
}

TEST(TiedPartitionsTest, EqualPairUnderEachRule) {
  const GameSpec lose = Plurality({2, 2, 1}, TieRule::kTiesLose);
  const auto ties = TiedPartitions(lose);
  // Only the all-singletons partition ties at the top, 2 against 2.
  ASSERT_EQ(ties.size(), 1u);
  EXPECT_EQ(ties[0].seats, (std::vector<std::int64_t>{2, 2, 1}));
  EXPECT_EQ(ties[0].top_weight, 2);
  EXPECT_EQ(ties[0].tied.size(), 2u);
  EXPECT_TRUE(ties[0].winners.empty());

  const auto all_win = TiedPartitions(Plurality({2, 2, 1}, TieRule::kTiesAllWin));
  ASSERT_EQ(all_win.size(), 1u);
  EXPECT_EQ(all_win[0].winners.size(), 2u);

  const GameSpec votes = Plurality({2, 2, 1}, TieRule::kVotes, {3, 9, 1});
  const auto by_votes = TiedPartitions(votes);
  ASSERT_EQ(by_votes.size(), 1u);
  EXPECT_EQ(by_votes[0].winners,
            (std::vector<Coalition>{Coalition::Singleton(1)}));
}

}  // namespace
}  // namespace pfpower
