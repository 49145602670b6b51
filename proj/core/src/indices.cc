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

#include "pfpower/indices.h"

#include <string>

#include "pfpower/enumeration.h"
#include "pfpower/errors.h"

namespace pfpower {
namespace {

void RequireNonEmpty(const MwcSet& set) {
  if (set.empty()) {
    throw DegenerateGameError(
        "power indices are undefined for an empty minimal winning set");
  }
}

void RequireTable(const MwcSet& set, const PlayerTable& table) {
  if (set.player_count() != table.size()) {
    throw MalformedInputError("player table does not match the game");
  }
}

IndexVector Blank(IndexKind kind, const MwcSet& set) {
  return IndexVector{kind, set.form(),
                     std::vector<Rational>(set.player_count(), Rational(0))};
}

std::int64_t TotalParticipation(const std::vector<std::int64_t>& counts) {
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace

std::string_view ToString(IndexKind kind) {
  switch (kind) {
    case IndexKind::kDeeganPackel:
      return "dp";
    case IndexKind::kPublicGood:
      return "pg";
    case IndexKind::kColomerMartinez:
      return "cm";
    case IndexKind::kHollerColomerMartinez:
      return "hcm";
  }
  return "unknown";
}

IndexKind ParseIndexKind(std::string_view text) {
  for (IndexKind k : kAllIndices) {
    if (ToString(k) == text) return k;
  }
  throw ValidationError("index", "unknown index '" + std::string(text) +
                                     "' (expected dp, pg, cm or hcm)");
}

Rational IndexVector::Sum() const {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

IndexVector DeeganPackel(const MwcSet& set) {
  RequireNonEmpty(set);
  IndexVector out = Blank(IndexKind::kDeeganPackel, set);
  for (Coalition s : set.actives()) {
    const Rational share(1, s.size());
    for (int i : s.members()) out.values[i] += share;
  }
  const Rational count(static_cast<std::int64_t>(set.size()));
  for (auto& v : out.values) v /= count;
  return out;
}

IndexVector PublicGood(const MwcSet& set) {
  RequireNonEmpty(set);
  const auto counts = ParticipationCounts(set);
  const std::int64_t total = TotalParticipation(counts);
  IndexVector out = Blank(IndexKind::kPublicGood, set);
  for (int i = 0; i < set.player_count(); ++i) {
    out.values[i] = Rational(counts[i], total);
  }
  return out;
}

IndexVector ColomerMartinez(const MwcSet& set, const PlayerTable& table) {
  RequireNonEmpty(set);
  RequireTable(set, table);
  IndexVector out = Blank(IndexKind::kColomerMartinez, set);
  for (Coalition s : set.actives()) {
    const std::int64_t ws = BlockWeight(s, table);
    if (ws == 0) {
      throw DegenerateGameError("minimal winning coalition of zero weight");
    }
    for (int i : s.members()) out.values[i] += Rational(table.weight(i), ws);
  }
  const Rational count(static_cast<std::int64_t>(set.size()));
  for (auto& v : out.values) v /= count;
  return out;
}

IndexVector HollerColomerMartinez(const MwcSet& set, const PlayerTable& table) {
  RequireNonEmpty(set);
  RequireTable(set, table);
  const auto counts = ParticipationCounts(set);
  std::int64_t denominator = 0;
  for (int j = 0; j < set.player_count(); ++j) {
    denominator += counts[j] * table.weight(j);
  }
  if (denominator == 0) {
    throw DegenerateGameError(
        "every minimal winning coalition member has zero weight");
  }
  IndexVector out = Blank(IndexKind::kHollerColomerMartinez, set);
  for (int i = 0; i < set.player_count(); ++i) {
    out.values[i] = Rational(counts[i] * table.weight(i), denominator);
  }
  return out;
}

IndexVector HollerColomerMartinezAlternative(const MwcSet& set,
                                             const PlayerTable& table) {
  RequireNonEmpty(set);
  RequireTable(set, table);
  Rational total_weight = 0;
  for (Coalition t : set.actives()) total_weight += BlockWeight(t, table);
  if (total_weight == 0) {
    throw DegenerateGameError(
        "every minimal winning coalition member has zero weight");
  }
  IndexVector out = Blank(IndexKind::kHollerColomerMartinez, set);
  for (Coalition s : set.actives()) {
    for (int i : s.members()) {
      out.values[i] += Rational(table.weight(i)) / total_weight;
    }
  }
  return out;
}

IndexVector ComputeIndex(IndexKind kind, const MwcSet& set,
                         const PlayerTable& table) {
  switch (kind) {
    case IndexKind::kDeeganPackel:
      return DeeganPackel(set);
    case IndexKind::kPublicGood:
      return PublicGood(set);
    case IndexKind::kColomerMartinez:
      return ColomerMartinez(set, table);
    case IndexKind::kHollerColomerMartinez:
      return HollerColomerMartinez(set, table);
  }
  throw ValidationError("index", "unknown index kind");
}

Coalition NullPlayers(const MwcSet& set) {
  Coalition present;
  for (Coalition s : set.actives()) present = present | s;
  return Coalition::Full(set.player_count()) - present;
}

std::vector<std::pair<int, int>> SymmetricPairs(const CharacteristicGame& game) {
  const int n = game.player_count();
  const Coalition full = Coalition::Full(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Coalition rest = full.Without(i).Without(j);
      bool symmetric = true;
      // Every subset of `rest`, by the standard submask walk.
      Coalition::Mask sub = rest.mask();
      while (true) {
        const Coalition s(sub);
        if (!game(s) && game(s.With(i)) != game(s.With(j))) {
          symmetric = false;
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & rest.mask();
      }
      if (symmetric) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<std::pair<int, int>> SymmetricPairsCharacteristic(
    const GameSpec& spec) {
  return SymmetricPairs(CharacteristicGame::FromSpec(spec));
}

namespace {

// Blocks of P with S and P(k) removed, then S + k and P(k) - k added.
int MoveInto(std::span<const Coalition> blocks, Coalition s, int k,
             std::array<Coalition, kMaxPlayers + 1>& out) {
  Coalition home;
  for (Coalition b : blocks) {
    if (b.contains(k)) home = b;
  }
  int m = 0;
  for (Coalition b : blocks) {
    if (b != s && b != home) out[m++] = b;
  }
  out[m++] = s.With(k);
  if (home.size() > 1) out[m++] = home.Without(k);
  return m;
}

}  // namespace

std::vector<PartitionSymmetry> SymmetricPairsPartition(
    const PartitionGame& game, const EnumerationOptions& options) {
  const int n = game.player_count();
  std::vector<PartitionSymmetry> result;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PartitionSymmetry sym{i, j, true, true};
      std::array<Coalition, kMaxPlayers + 1> left{};
      std::array<Coalition, kMaxPlayers + 1> right{};
      auto check = [&](std::span<const Coalition> blocks, Coalition s,
                       bool apart) {
        const int l = MoveInto(blocks, s, i, left);
        const int r = MoveInto(blocks, s, j, right);
        const bool vi = game.Evaluate(
            s.With(i), std::span<const Coalition>(left.data(), l));
        const bool vj = game.Evaluate(
            s.With(j), std::span<const Coalition>(right.data(), r));
        if (vi != vj) {
          sym.symmetric = false;
          if (apart) sym.symmetric_when_apart = false;
        }
      };
      for (const Partition& p : PartitionEnumerator(n, options.capacity)) {
        const auto blocks = p.blocks();
        const bool apart = p.BlockOf(i) != p.BlockOf(j);
        check(blocks, Coalition(), apart);
        for (Coalition s : blocks) {
          if (!s.contains(i) && !s.contains(j)) check(blocks, s, apart);
        }
      }
      result.push_back(sym);
    }
  }
  return result;
}

WeightedSymmetryCheck CheckWeightedSymmetry(const IndexVector& index,
                                            const MwcSet& set,
                                            const PlayerTable& table) {
  if (set.size() != 1) return {false, true};
  const auto members = set.active(0).members();
  for (int i : members) {
    for (int j : members) {
      if (index.values[i] * table.weight(j) !=
          index.values[j] * table.weight(i)) {
        return {true, false};
      }
    }
  }
  return {true, true};
}

namespace {

struct MergeParts {
  MwcSet a;
  MwcSet b;
  MwcSet joined;
};

MergeParts PrepareMerge(const CharacteristicGame& a,
                        const CharacteristicGame& b) {
  if (!IsMergeable(a, b)) {
    throw NotMergeableError(
        "games have nested minimal winning coalitions");
  }
  return MergeParts{MinimalWinningCoalitions(a), MinimalWinningCoalitions(b),
                    MinimalWinningCoalitions(UnionGame(a, b))};
}

}  // namespace

bool DeeganPackelMergeCheck(const CharacteristicGame& a,
                            const CharacteristicGame& b) {
  const MergeParts parts = PrepareMerge(a, b);
  const IndexVector da = DeeganPackel(parts.a);
  const IndexVector db = DeeganPackel(parts.b);
  const IndexVector dj = DeeganPackel(parts.joined);
  const Rational ma(static_cast<std::int64_t>(parts.a.size()));
  const Rational mb(static_cast<std::int64_t>(parts.b.size()));
  const Rational mj(static_cast<std::int64_t>(parts.joined.size()));
  for (int i = 0; i < a.player_count(); ++i) {
    if ((ma * da.values[i] + mb * db.values[i]) / mj != dj.values[i]) {
      return false;
    }
  }
  return true;
}

bool PublicGoodMergeCheck(const CharacteristicGame& a,
                          const CharacteristicGame& b) {
  const MergeParts parts = PrepareMerge(a, b);
  const IndexVector pa = PublicGood(parts.a);
  const IndexVector pb = PublicGood(parts.b);
  const IndexVector pj = PublicGood(parts.joined);
  const Rational ta(TotalParticipation(ParticipationCounts(parts.a)));
  const Rational tb(TotalParticipation(ParticipationCounts(parts.b)));
  const Rational tj(TotalParticipation(ParticipationCounts(parts.joined)));
  for (int i = 0; i < a.player_count(); ++i) {
    if ((ta * pa.values[i] + tb * pb.values[i]) / tj != pj.values[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace pfpower
