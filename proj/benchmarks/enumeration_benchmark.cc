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

#include "pfpower/enumeration.h"

namespace pfpower {
namespace {

void BM_PartitionEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::int64_t visited = 0;
  for (auto _ : state) {
    for (const Partition& p : PartitionEnumerator(n, kMaxPlayers)) {
      benchmark::DoNotOptimize(p.block_count());
      ++visited;
    }
  }
  state.SetItemsProcessed(visited);
}
BENCHMARK(BM_PartitionEnumeration)->DenseRange(6, 11, 1);

void BM_EmbeddedCoalitionEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::int64_t visited = 0;
  for (auto _ : state) {
    for (const EmbeddedCoalition& ec : EmbeddedCoalitionEnumerator(n)) {
      benchmark::DoNotOptimize(ec.active.mask());
      ++visited;
    }
  }
  state.SetItemsProcessed(visited);
}
BENCHMARK(BM_EmbeddedCoalitionEnumeration)->DenseRange(6, 10, 2);

void BM_InclusionTest(benchmark::State& state) {
  const Partition fine = Partition::FromBlocks(
      10, {Coalition::FromMembers({0, 1}), Coalition::FromMembers({2}),
           Coalition::FromMembers({3, 4}), Coalition::FromMembers({5}),
           Coalition::FromMembers({6, 7}), Coalition::FromMembers({8, 9})});
  const Partition coarse = Partition::FromBlocks(
      10, {Coalition::FromMembers({0, 1}), Coalition::FromMembers({2, 3, 4}),
           Coalition::FromMembers({5, 6, 7, 8, 9})});
  const auto a =
      EmbeddedCoalition::Make(Coalition::FromMembers({0, 1}), coarse);
  const auto b = EmbeddedCoalition::Make(Coalition::FromMembers({0, 1}), fine);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsEcSubset(a, b));
  }
}
BENCHMARK(BM_InclusionTest);

}  // namespace
}  // namespace pfpower
