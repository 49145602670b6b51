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

#include "pfpower/player_table.h"

#include <unordered_set>

#include "pfpower/errors.h"

namespace pfpower {

PlayerTable::PlayerTable(std::vector<Player> players)
    : players_(std::move(players)) {
  if (players_.empty()) {
    throw ValidationError("players", "at least one player is required");
  }
  if (size() > kMaxPlayers) {
    throw CapacityError("at most " + std::to_string(kMaxPlayers) +
                        " players are supported, got " +
                        std::to_string(size()));
  }
  std::unordered_set<std::string> seen;
  int with_votes = 0;
  for (int i = 0; i < size(); ++i) {
    const Player& p = players_[i];
    const std::string path = "players[" + std::to_string(i) + "]";
    if (p.id.empty()) throw ValidationError(path + ".id", "id is empty");
    if (!seen.insert(p.id).second) {
      throw ValidationError(path + ".id", "duplicate id '" + p.id + "'");
    }
    if (p.weight < 0) {
      throw ValidationError(path + ".weight", "weight is negative");
    }
    if (p.votes.has_value()) {
      if (*p.votes < 0) {
        throw ValidationError(path + ".votes", "votes are negative");
      }
      ++with_votes;
    }
    total_weight_ += p.weight;
  }
  if (total_weight_ == 0) {
    throw ValidationError("players", "at least one weight must be positive");
  }
  if (with_votes != 0 && with_votes != size()) {
    throw ValidationError("players",
                          "votes must be given for every player or for none");
  }
  has_votes_ = with_votes == size();
}

int PlayerTable::IndexOf(std::string_view id) const {
  for (int i = 0; i < size(); ++i) {
    if (players_[i].id == id) return i;
  }
  throw MalformedInputError("unknown player id '" + std::string(id) + "'");
}

Coalition PlayerTable::CoalitionOf(const std::vector<std::string>& ids) const {
  Coalition c;
  for (const auto& id : ids) c = c.With(IndexOf(id));
  return c;
}

std::vector<std::string> PlayerTable::IdsOf(Coalition c) const {
  CheckMembers(c);
  std::vector<std::string> out;
  for (int m : c.members()) out.push_back(players_[m].id);
  return out;
}

void PlayerTable::CheckMembers(Coalition c) const {
  if (!c.IsSubsetOf(all())) {
    throw MalformedInputError("coalition refers to player index " +
                              std::to_string(c.span() - 1) +
                              " outside a table of " + std::to_string(size()));
  }
}

std::int64_t BlockWeight(Coalition c, const PlayerTable& table) {
  table.CheckMembers(c);
  std::int64_t sum = 0;
  for (int m : c.members()) sum += table.weight(m);
  return sum;
}

std::int64_t BlockVotes(Coalition c, const PlayerTable& table) {
  if (!table.has_votes()) {
    throw ConfigurationError("player table carries no vote counts");
  }
  table.CheckMembers(c);
  std::int64_t sum = 0;
  for (int m : c.members()) sum += *table.player(m).votes;
  return sum;
}

}  // namespace pfpower
