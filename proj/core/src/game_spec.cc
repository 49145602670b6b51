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

#include "pfpower/game_spec.h"

#include "pfpower/errors.h"

namespace pfpower {

std::string_view ToString(GameForm form) {
  return form == GameForm::kCharacteristic ? "characteristic" : "partition";
}

std::string_view ToString(TieRule rule) {
  switch (rule) {
    case TieRule::kTiesLose:
      return "ties_lose";
    case TieRule::kTiesAllWin:
      return "ties_all_win";
    case TieRule::kVotes:
      return "votes";
  }
  return "unknown";
}

TieRule ParseTieRule(std::string_view text) {
  if (text == "ties_lose") return TieRule::kTiesLose;
  if (text == "ties_all_win") return TieRule::kTiesAllWin;
  if (text == "votes") return TieRule::kVotes;
  throw ValidationError("tie_rule", "unknown tie rule '" + std::string(text) +
                                        "' (expected ties_lose, "
                                        "ties_all_win or votes)");
}

GameSpec::GameSpec(PlayerTable table, CharacteristicForm form)
    : table_(std::move(table)), form_(form) {
  if (form.quota <= 0 || form.quota > table_.total_weight()) {
    throw ValidationError(
        "quota", "quota " + std::to_string(form.quota) +
                     " must lie in [1, " +
                     std::to_string(table_.total_weight()) + "]");
  }
}

GameSpec::GameSpec(PlayerTable table, PartitionForm form)
    : table_(std::move(table)), form_(form) {
  if (form.tie_rule == TieRule::kVotes && !table_.has_votes()) {
    throw ConfigurationError("tie rule 'votes' requires vote counts for "
                             "every player");
  }
}

GameForm GameSpec::form() const {
  return std::holds_alternative<CharacteristicForm>(form_)
             ? GameForm::kCharacteristic
             : GameForm::kPartition;
}

std::int64_t GameSpec::quota() const {
  if (const auto* c = std::get_if<CharacteristicForm>(&form_)) return c->quota;
  throw FormMismatchError("partition-form game has no quota");
}

TieRule GameSpec::tie_rule() const {
  if (const auto* p = std::get_if<PartitionForm>(&form_)) return p->tie_rule;
  throw FormMismatchError("characteristic-form game has no tie rule");
}

}  // namespace pfpower
