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

#ifndef PFPOWER_GAME_SPEC_H_
#define PFPOWER_GAME_SPEC_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "pfpower/player_table.h"

namespace pfpower {

enum class GameForm { kCharacteristic, kPartition };

// How a partition whose heaviest weight is shared by several blocks is
// resolved.
enum class TieRule {
  kTiesLose,    // no tied block wins
  kTiesAllWin,  // every tied block wins
  kVotes,       // the tied block with strictly most votes wins, else none
};

std::string_view ToString(GameForm form);
std::string_view ToString(TieRule rule);
// Accepts "ties_lose", "ties_all_win" and "votes". Throws ValidationError.
TieRule ParseTieRule(std::string_view text);

// [q; w]: a coalition wins iff its weight reaches the quota.
struct CharacteristicForm {
  std::int64_t quota = 0;
  friend bool operator==(const CharacteristicForm&,
                         const CharacteristicForm&) = default;
};

// Plurality: the active block wins iff it is at least as heavy as every other
// block, ties being settled by `tie_rule`.
struct PartitionForm {
  TieRule tie_rule = TieRule::kTiesLose;
  friend bool operator==(const PartitionForm&, const PartitionForm&) = default;
};

// Weights plus rule: fully determines a simple game.
class GameSpec {
 public:
  // Throws ValidationError unless 0 < quota <= total weight.
  GameSpec(PlayerTable table, CharacteristicForm form);
  // Throws ConfigurationError for the vote rule without vote data.
  GameSpec(PlayerTable table, PartitionForm form);

  const PlayerTable& table() const { return table_; }
  int player_count() const { return table_.size(); }
  GameForm form() const;
  // Throw FormMismatchError when the spec has the other form.
  std::int64_t quota() const;
  TieRule tie_rule() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  PlayerTable table_;
  std::variant<CharacteristicForm, PartitionForm> form_;
};

}  // namespace pfpower

#endif  // PFPOWER_GAME_SPEC_H_
