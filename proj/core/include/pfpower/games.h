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

#ifndef PFPOWER_GAMES_H_
#define PFPOWER_GAMES_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pfpower/coalition.h"
#include "pfpower/game_spec.h"
#include "pfpower/partition.h"

namespace pfpower {

struct EnumerationOptions {
  int capacity = kDefaultCapacity;
  // Worker threads for partition scans; 0 picks the hardware concurrency.
  int threads = 0;
};

// ---------------------------------------------------------------------------
// Characteristic form.

// A simple game in characteristic function form, held as its full winning
// table over all 2^n coalitions.
class CharacteristicGame {
 public:
  // Throws MalformedInputError for n outside [1, kMaxPlayers].
  static CharacteristicGame FromPredicate(
      int n, const std::function<bool(Coalition)>& wins);
  // Throws FormMismatchError for partition-form specs.
  static CharacteristicGame FromSpec(const GameSpec& spec);
  // u_S. Throws MalformedInputError when `s` is empty.
  static CharacteristicGame Unanimity(int n, Coalition s);

  int player_count() const { return n_; }
  bool operator()(Coalition c) const { return winning_[c.mask()] != 0; }

  bool IsMonotone() const;
  bool IsDecisive() const;

  friend bool operator==(const CharacteristicGame&,
                         const CharacteristicGame&) = default;

 private:
  CharacteristicGame(int n, std::vector<std::uint8_t> winning)
      : n_(n), winning_(std::move(winning)) {}

  int n_;
  std::vector<std::uint8_t> winning_;
};

// S wins iff w(S) >= q. Throws FormMismatchError for partition-form specs.
bool IsWinningCharacteristic(Coalition c, const GameSpec& spec);

// (v or v')(S) = max(v(S), v'(S)). Throws MalformedInputError when the
// player counts differ.
CharacteristicGame UnionGame(const CharacteristicGame& a,
                             const CharacteristicGame& b);

// u_S(T): 1 iff S is a subset of T. Throws MalformedInputError for empty S.
int UnanimityGameEval(Coalition s, Coalition t);

// ---------------------------------------------------------------------------
// Partition function form.

// A game in partition function form given by its evaluator. The evaluator
// receives the active coalition and every block of the partition (active
// included, in no particular order) and is never called with an empty active
// coalition: v(empty;P) = 0 is applied before dispatch.
class PartitionGame {
 public:
  using Evaluator =
      std::function<bool(Coalition active, std::span<const Coalition> blocks)>;

  PartitionGame(int n, Evaluator evaluator);

  // The plurality game of a partition-form spec. Throws FormMismatchError
  // for characteristic specs.
  static PartitionGame FromSpec(const GameSpec& spec);

  int player_count() const { return n_; }
  bool operator()(const EmbeddedCoalition& ec) const;
  bool Evaluate(Coalition active, std::span<const Coalition> blocks) const {
    return !active.empty() && evaluator_(active, blocks);
  }

 private:
  int n_;
  Evaluator evaluator_;
};

// Plurality rule: S must weigh at least as much as every other block, ties
// at the maximum being settled by the spec's tie rule. Always false for an
// empty active coalition. Throws FormMismatchError for characteristic specs
// and MalformedInputError when the player counts differ.
bool IsWinningEmbedded(const EmbeddedCoalition& ec, const GameSpec& spec);

// e_(S;P)(T;Q): 1 iff (S;P) is included in (T;Q). Throws MalformedInputError
// for an empty base or mismatched player sets.
int BasisGameEval(const EmbeddedCoalition& base, const EmbeddedCoalition& at);

// The unique simple game whose minimal winning embedded coalitions are
// exactly `antichain`: v(T;Q) = 1 iff some element is included in (T;Q).
// Throws AntichainViolationError naming a comparable pair, and
// MalformedInputError for an empty set, empty active coalitions, or mixed
// player counts.
PartitionGame GameFromAntichain(std::vector<EmbeddedCoalition> antichain);

// v(a) <= v(b) whenever a is included in b. Checked over the elementary
// descent steps, which generate the inclusion order.
bool IsMonotone(const PartitionGame& game,
                const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Minimal winning sets.

// Minimal winning coalitions (characteristic) or minimal winning embedded
// coalitions (partition form), sorted in presentation order.
class MwcSet {
 public:
  static MwcSet FromCoalitions(int n, std::vector<Coalition> coalitions);
  static MwcSet FromEmbedded(int n, std::vector<EmbeddedCoalition> embedded);

  GameForm form() const { return form_; }
  int player_count() const { return n_; }
  std::size_t size() const { return actives_.size(); }
  bool empty() const { return actives_.empty(); }

  // Active coalition of element k (the coalition itself in characteristic
  // form).
  Coalition active(std::size_t k) const { return actives_[k]; }
  const std::vector<Coalition>& actives() const { return actives_; }
  // Throws FormMismatchError for characteristic sets.
  const std::vector<EmbeddedCoalition>& embedded() const;

  // No element strictly below another (subset or inclusion order).
  bool IsAntichain() const;

  friend bool operator==(const MwcSet&, const MwcSet&) = default;

 private:
  MwcSet() = default;

  GameForm form_ = GameForm::kCharacteristic;
  int n_ = 0;
  std::vector<Coalition> actives_;
  std::vector<EmbeddedCoalition> embedded_;
};

MwcSet MinimalWinningCoalitions(const CharacteristicGame& game);
// Throws FormMismatchError for partition-form specs.
MwcSet MinimalWinningCoalitions(const GameSpec& spec);

// Winning embedded coalitions none of whose elementary descents win. For a
// monotone game (every game built by this library) these are exactly the
// winning embedded coalitions with no winning proper subset.
MwcSet MinimalWinningEmbeddedCoalitions(const PartitionGame& game,
                                        const EnumerationOptions& options = {});
// Throws FormMismatchError for characteristic specs.
MwcSet MinimalWinningEmbeddedCoalitions(const GameSpec& spec,
                                        const EnumerationOptions& options = {});

// |M_i|: number of elements whose active coalition contains player i.
std::vector<std::int64_t> ParticipationCounts(const MwcSet& set);

// S in M(v), T in M(v') never nested either way. Throws MalformedInputError
// when the player counts differ.
bool IsMergeable(const CharacteristicGame& a, const CharacteristicGame& b);

// ---------------------------------------------------------------------------
// Ties.

// A partition whose maximum block weight is shared by two or more blocks.
struct TiedPartition {
  Partition partition;
  std::vector<std::int64_t> seats;  // per block, canonical block order
  std::int64_t top_weight = 0;
  std::vector<Coalition> tied;      // blocks at top_weight
  std::vector<Coalition> winners;   // tied blocks that win under the rule
};

std::vector<TiedPartition> TiedPartitions(const GameSpec& spec,
                                          const EnumerationOptions& options = {});

}  // namespace pfpower

#endif  // PFPOWER_GAMES_H_
