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

#include "pfpower/games.h"

#include <algorithm>
#include <atomic>
#include <memory>
#include <string>
#include <thread>

#include "pfpower/enumeration.h"
#include "pfpower/errors.h"

namespace pfpower {
namespace {

void CheckSamePlayers(int a, int b) {
  if (a != b) {
    throw MalformedInputError("games over different player sets (" +
                              std::to_string(a) + " vs " + std::to_string(b) +
                              " players)");
  }
}

// Per-mask sums of weights and votes, so block weights are O(1) lookups.
struct PluralityTables {
  std::vector<std::int64_t> weight;
  std::vector<std::int64_t> votes;
  TieRule rule;
};

std::shared_ptr<const PluralityTables> BuildTables(const GameSpec& spec) {
  const PlayerTable& table = spec.table();
  const int n = table.size();
  auto t = std::make_shared<PluralityTables>();
  t->rule = spec.tie_rule();
  t->weight.assign(std::size_t{1} << n, 0);
  if (table.has_votes()) t->votes.assign(std::size_t{1} << n, 0);
  for (Coalition::Mask m = 1; m < (Coalition::Mask{1} << n); ++m) {
    const int low = std::countr_zero(m);
    const Coalition::Mask rest = m & (m - 1);
    t->weight[m] = t->weight[rest] + table.weight(low);
    if (!t->votes.empty()) t->votes[m] = t->votes[rest] + *table.player(low).votes;
  }
  return t;
}

bool PluralityWins(const PluralityTables& t, Coalition active,
                   std::span<const Coalition> blocks) {
  if (active.empty()) return false;
  const std::int64_t wa = t.weight[active.mask()];
  for (Coalition b : blocks) {
    if (b == active || b.empty()) continue;
    const std::int64_t wb = t.weight[b.mask()];
    if (wb < wa) continue;
    if (wb > wa) return false;
    switch (t.rule) {
      case TieRule::kTiesAllWin:
        break;
      case TieRule::kTiesLose:
        return false;
      case TieRule::kVotes:
        // Equal votes as well: nobody wins the tie.
        if (t.votes[b.mask()] >= t.votes[active.mask()]) return false;
        break;
    }
  }
  return true;
}

int WorkerCount(const EnumerationOptions& options) {
  if (options.threads > 0) return options.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs `scan(enumerator, sink)` over the whole partition stream, split into
// prefix chunks across workers when that pays off. Chunk results are
// concatenated in prefix order, so the output is independent of scheduling.
template <typename T, typename Scan>
std::vector<T> ScanPartitions(int n, const EnumerationOptions& options,
                              Scan&& scan) {
  CheckCapacity(n, options.capacity);
  const int workers = WorkerCount(options);
  if (workers == 1 || n < 8) {
    std::vector<T> out;
    PartitionEnumerator e(n, options.capacity);
    scan(e, out);
    return out;
  }
  const auto prefixes = RestrictedGrowthPrefixes(5);
  std::vector<std::vector<T>> chunks(prefixes.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
          PartitionEnumerator e(n, prefixes[i], options.capacity);
          scan(e, chunks[i]);
        }
      });
    }
  }
  std::vector<T> out;
  for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

// --- characteristic form ---------------------------------------------------

CharacteristicGame CharacteristicGame::FromPredicate(
    int n, const std::function<bool(Coalition)>& wins) {
  if (n < 1 || n > kMaxPlayers) {
    throw MalformedInputError("player count " + std::to_string(n) +
                              " outside [1, " + std::to_string(kMaxPlayers) +
                              "]");
  }
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Coalition::Mask m = 0; m < table.size(); ++m) {
    table[m] = wins(Coalition(m)) ? 1 : 0;
  }
  return CharacteristicGame(n, std::move(table));
}

CharacteristicGame CharacteristicGame::FromSpec(const GameSpec& spec) {
  const std::int64_t quota = spec.quota();
  const PlayerTable& table = spec.table();
  return FromPredicate(table.size(), [&](Coalition c) {
    return BlockWeight(c, table) >= quota;
  });
}

CharacteristicGame CharacteristicGame::Unanimity(int n, Coalition s) {
  if (s.empty()) {
    throw MalformedInputError("unanimity game of the empty coalition");
  }
  if (!s.IsSubsetOf(Coalition::Full(n))) {
    throw MalformedInputError("unanimity coalition outside the player set");
  }
  return FromPredicate(n, [s](Coalition t) { return s.IsSubsetOf(t); });
}

bool CharacteristicGame::IsMonotone() const {
  for (Coalition::Mask m = 0; m < winning_.size(); ++m) {
    if (!winning_[m]) continue;
    for (int i = 0; i < n_; ++i) {
      if (!winning_[m | (Coalition::Mask{1} << i)]) return false;
    }
  }
  return true;
}

bool CharacteristicGame::IsDecisive() const {
  const Coalition::Mask full = Coalition::Full(n_).mask();
  for (Coalition::Mask m = 0; m < winning_.size(); ++m) {
    if ((winning_[m] != 0) == (winning_[full & ~m] != 0)) return false;
  }
  return true;
}

bool IsWinningCharacteristic(Coalition c, const GameSpec& spec) {
  return BlockWeight(c, spec.table()) >= spec.quota();
}

CharacteristicGame UnionGame(const CharacteristicGame& a,
                             const CharacteristicGame& b) {
  CheckSamePlayers(a.player_count(), b.player_count());
  return CharacteristicGame::FromPredicate(
      a.player_count(), [&](Coalition c) { return a(c) || b(c); });
}

int UnanimityGameEval(Coalition s, Coalition t) {
  if (s.empty()) {
    throw MalformedInputError("unanimity game of the empty coalition");
  }
  return s.IsSubsetOf(t) ? 1 : 0;
}

// --- partition function form -----------------------------------------------

PartitionGame::PartitionGame(int n, Evaluator evaluator)
    : n_(n), evaluator_(std::move(evaluator)) {
  if (n < 1 || n > kMaxPlayers) {
    throw MalformedInputError("player count " + std::to_string(n) +
                              " outside [1, " + std::to_string(kMaxPlayers) +
                              "]");
  }
}

PartitionGame PartitionGame::FromSpec(const GameSpec& spec) {
  auto tables = BuildTables(spec);
  return PartitionGame(spec.player_count(),
                       [tables](Coalition active,
                                std::span<const Coalition> blocks) {
                         return PluralityWins(*tables, active, blocks);
                       });
}

bool PartitionGame::operator()(const EmbeddedCoalition& ec) const {
  CheckSamePlayers(ec.player_count(), n_);
  return Evaluate(ec.active, ec.partition.blocks());
}

bool IsWinningEmbedded(const EmbeddedCoalition& ec, const GameSpec& spec) {
  const TieRule rule = spec.tie_rule();
  CheckSamePlayers(ec.player_count(), spec.player_count());
  if (ec.active.empty()) return false;
  const PlayerTable& table = spec.table();
  const std::int64_t wa = BlockWeight(ec.active, table);
  for (Coalition b : ec.partition.blocks()) {
    if (b == ec.active) continue;
    const std::int64_t wb = BlockWeight(b, table);
    if (wb < wa) continue;
    if (wb > wa || rule == TieRule::kTiesLose) return false;
    if (rule == TieRule::kVotes &&
        BlockVotes(b, table) >= BlockVotes(ec.active, table)) {
      return false;
    }
  }
  return true;
}

int BasisGameEval(const EmbeddedCoalition& base, const EmbeddedCoalition& at) {
  if (base.active.empty()) {
    throw MalformedInputError("basis game of an empty active coalition");
  }
  return IsEcSubset(base, at) ? 1 : 0;
}

PartitionGame GameFromAntichain(std::vector<EmbeddedCoalition> antichain) {
  if (antichain.empty()) {
    throw MalformedInputError("antichain is empty");
  }
  const int n = antichain.front().player_count();
  for (const auto& ec : antichain) {
    CheckSamePlayers(ec.player_count(), n);
    if (ec.active.empty()) {
      throw MalformedInputError("antichain element with empty active coalition");
    }
  }
  std::sort(antichain.begin(), antichain.end(),
            [](const auto& a, const auto& b) { return PresentationLess(a, b); });
  antichain.erase(std::unique(antichain.begin(), antichain.end()),
                  antichain.end());
  for (std::size_t i = 0; i < antichain.size(); ++i) {
    for (std::size_t j = 0; j < antichain.size(); ++j) {
      if (i != j && IsEcSubset(antichain[i], antichain[j])) {
        throw AntichainViolationError(
            "elements " + std::to_string(i) + " and " + std::to_string(j) +
            " are comparable: the first is included in the second");
      }
    }
  }
  auto elements =
      std::make_shared<const std::vector<EmbeddedCoalition>>(std::move(antichain));
  return PartitionGame(
      n, [elements](Coalition active, std::span<const Coalition> blocks) {
        for (const auto& e : *elements) {
          if (detail::EcIncluded(e.active, e.partition.blocks(), active,
                                 blocks)) {
            return true;
          }
        }
        return false;
      });
}

bool IsMonotone(const PartitionGame& game, const EnumerationOptions& options) {
  const auto violations = ScanPartitions<int>(
      game.player_count(), options, [&](PartitionEnumerator& e, auto& sink) {
        while (e.Next()) {
          const auto blocks = e.current().blocks();
          for (Coalition a : blocks) {
            if (game.Evaluate(a, blocks)) continue;
            if (ForEachElementaryDescent(a, blocks,
                                         [&](Coalition s, auto bl) {
                                           return game.Evaluate(s, bl);
                                         })) {
              sink.push_back(1);
              return;
            }
          }
        }
      });
  return violations.empty();
}

// --- minimal winning sets ----------------------------------------------------

MwcSet MwcSet::FromCoalitions(int n, std::vector<Coalition> coalitions) {
  std::sort(coalitions.begin(), coalitions.end(),
            [](Coalition a, Coalition b) { return PresentationLess(a, b); });
  MwcSet s;
  s.form_ = GameForm::kCharacteristic;
  s.n_ = n;
  s.actives_ = std::move(coalitions);
  return s;
}

MwcSet MwcSet::FromEmbedded(int n, std::vector<EmbeddedCoalition> embedded) {
  std::sort(embedded.begin(), embedded.end(),
            [](const auto& a, const auto& b) { return PresentationLess(a, b); });
  MwcSet s;
  s.form_ = GameForm::kPartition;
  s.n_ = n;
  s.actives_.reserve(embedded.size());
  for (const auto& ec : embedded) s.actives_.push_back(ec.active);
  s.embedded_ = std::move(embedded);
  return s;
}

const std::vector<EmbeddedCoalition>& MwcSet::embedded() const {
  if (form_ != GameForm::kPartition) {
    throw FormMismatchError("characteristic minimal winning set has no "
                            "embedded coalitions");
  }
  return embedded_;
}

bool MwcSet::IsAntichain() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j) continue;
      const bool below =
          form_ == GameForm::kCharacteristic
              ? actives_[i].IsSubsetOf(actives_[j])
              : IsEcSubset(embedded_[i], embedded_[j]);
      if (below) return false;
    }
  }
  return true;
}

MwcSet MinimalWinningCoalitions(const CharacteristicGame& game) {
  const int n = game.player_count();
  const std::size_t size = std::size_t{1} << n;
  // below[m]: some proper subset of m wins.
  std::vector<std::uint8_t> below(size, 0);
  std::vector<Coalition> out;
  for (Coalition::Mask m = 0; m < size; ++m) {
    for (Coalition::Mask r = m; r != 0; r &= r - 1) {
      const Coalition::Mask sub = m & ~(r & (~r + 1));
      if (below[sub] || game(Coalition(sub))) {
        below[m] = 1;
        break;
      }
    }
    if (!below[m] && game(Coalition(m)) && m != 0) out.emplace_back(m);
  }
  return MwcSet::FromCoalitions(n, std::move(out));
}

MwcSet MinimalWinningCoalitions(const GameSpec& spec) {
  return MinimalWinningCoalitions(CharacteristicGame::FromSpec(spec));
}

MwcSet MinimalWinningEmbeddedCoalitions(const PartitionGame& game,
                                        const EnumerationOptions& options) {
  auto found = ScanPartitions<EmbeddedCoalition>(
      game.player_count(), options, [&](PartitionEnumerator& e, auto& sink) {
        while (e.Next()) {
          const Partition& p = e.current();
          const auto blocks = p.blocks();
          for (Coalition a : blocks) {
            if (!game.Evaluate(a, blocks)) continue;
            const bool has_winning_descent = ForEachElementaryDescent(
                a, blocks,
                [&](Coalition s, auto bl) { return game.Evaluate(s, bl); });
            if (!has_winning_descent) sink.push_back(EmbeddedCoalition{a, p});
          }
        }
      });
  return MwcSet::FromEmbedded(game.player_count(), std::move(found));
}

MwcSet MinimalWinningEmbeddedCoalitions(const GameSpec& spec,
                                        const EnumerationOptions& options) {
  return MinimalWinningEmbeddedCoalitions(PartitionGame::FromSpec(spec),
                                          options);
}

std::vector<std::int64_t> ParticipationCounts(const MwcSet& set) {
  std::vector<std::int64_t> counts(set.player_count(), 0);
  for (Coalition a : set.actives()) {
    for (int m : a.members()) ++counts[m];
  }
  return counts;
}

bool IsMergeable(const CharacteristicGame& a, const CharacteristicGame& b) {
  CheckSamePlayers(a.player_count(), b.player_count());
  const MwcSet ma = MinimalWinningCoalitions(a);
  const MwcSet mb = MinimalWinningCoalitions(b);
  for (Coalition s : ma.actives()) {
    for (Coalition t : mb.actives()) {
      if (s.IsSubsetOf(t) || t.IsSubsetOf(s)) return false;
    }
  }
  return true;
}

// --- ties ------------------------------------------------------------------

std::vector<TiedPartition> TiedPartitions(const GameSpec& spec,
                                          const EnumerationOptions& options) {
  auto tables = BuildTables(spec);
  return ScanPartitions<TiedPartition>(
      spec.player_count(), options, [&](PartitionEnumerator& e, auto& sink) {
        while (e.Next()) {
          const Partition& p = e.current();
          const auto blocks = p.blocks();
          if (blocks.size() < 2) continue;
          std::int64_t top = 0;
          int at_top = 0;
          for (Coalition b : blocks) {
            const std::int64_t w = tables->weight[b.mask()];
            if (w > top) {
              top = w;
              at_top = 1;
            } else if (w == top) {
              ++at_top;
            }
          }
          if (at_top < 2) continue;
          TiedPartition t{p, {}, top, {}, {}};
          for (Coalition b : blocks) {
            const std::int64_t w = tables->weight[b.mask()];
            t.seats.push_back(w);
            if (w == top) {
              t.tied.push_back(b);
              if (PluralityWins(*tables, b, blocks)) t.winners.push_back(b);
            }
          }
          sink.push_back(std::move(t));
        }
      });
}

}  // namespace pfpower
