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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfpower/fixtures.h"
#include "pfpower/games.h"
#include "pfpower/indices.h"
#include "pfpower/player_table.h"

namespace pfpower {
namespace {

// Seat counts loosely shaped like a fragmented chamber: one large party, a
// few mid-sized ones and a tail of small ones.
GameSpec Chamber(int n, TieRule rule) {
  static constexpr int kSeats[] = {47, 25, 28, 14, 14, 9, 7, 5, 4, 3, 2, 2,
                                   1,  1,  1};
  std::vector<Player> players;
  for (int i = 0; i < n; ++i) {
    players.push_back({"P" + std::to_string(i + 1), kSeats[i], 1000 + i});
  }
  return GameSpec(PlayerTable(std::move(players)), PartitionForm{rule});
}

void BM_MinimalWinningEmbedded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GameSpec spec = Chamber(n, TieRule::kTiesLose);
  std::size_t found = 0;
  for (auto _ : state) {
    found = MinimalWinningEmbeddedCoalitions(spec).size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["mwec"] = static_cast<double>(found);
}
BENCHMARK(BM_MinimalWinningEmbedded)
    ->DenseRange(6, 10, 2)
    ->Unit(benchmark::kMillisecond);

void BM_FixtureAnalysis(benchmark::State& state) {
  const PeriodFixture& fixture = BundledFixtures()[state.range(0)];
  const GameSpec spec = fixture.Spec();
  for (auto _ : state) {
    const MwcSet set = MinimalWinningEmbeddedCoalitions(spec);
    for (IndexKind kind : kAllIndices) {
      benchmark::DoNotOptimize(ComputeIndex(kind, set, spec.table()));
    }
    benchmark::DoNotOptimize(TiedPartitions(spec));
  }
  state.SetLabel(fixture.label);
}
BENCHMARK(BM_FixtureAnalysis)->DenseRange(0, 5, 1)->Unit(
    benchmark::kMicrosecond);

void BM_MinimalWinningCharacteristic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Player> players;
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    players.push_back({"P" + std::to_string(i + 1), 2 * i + 1, std::nullopt});
    total += 2 * i + 1;
  }
  const GameSpec spec(PlayerTable(std::move(players)),
                      CharacteristicForm{total / 2 + 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinimalWinningCoalitions(spec));
  }
}
BENCHMARK(BM_MinimalWinningCharacteristic)
    ->DenseRange(9, 15, 3)
    ->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace pfpower
