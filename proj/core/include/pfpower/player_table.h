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

#ifndef PFPOWER_PLAYER_TABLE_H_
#define PFPOWER_PLAYER_TABLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfpower/coalition.h"

namespace pfpower {

struct Player {
  std::string id;
  std::int64_t weight = 0;
  std::optional<std::int64_t> votes;

  friend bool operator==(const Player&, const Player&) = default;
};

// Ordered registry of players. Player i of the table is bit i of every
// Coalition built against it.
//
// Invariants checked on construction: ids are unique and non-empty, weights
// and votes are non-negative, at least one weight is positive, and votes are
// either present for every player or for none.
class PlayerTable {
 public:
  explicit PlayerTable(std::vector<Player> players);

  int size() const { return static_cast<int>(players_.size()); }
  const Player& player(int index) const { return players_.at(index); }
  const std::vector<Player>& players() const { return players_; }
  const std::string& id(int index) const { return players_.at(index).id; }
  std::int64_t weight(int index) const { return players_.at(index).weight; }

  bool has_votes() const { return has_votes_; }
  std::int64_t total_weight() const { return total_weight_; }
  Coalition all() const { return Coalition::Full(size()); }

  // Throws MalformedInputError for unknown ids.
  int IndexOf(std::string_view id) const;
  Coalition CoalitionOf(const std::vector<std::string>& ids) const;
  std::vector<std::string> IdsOf(Coalition c) const;

  // Throws MalformedInputError when `c` names an index past the table.
  void CheckMembers(Coalition c) const;

  friend bool operator==(const PlayerTable& a, const PlayerTable& b) {
    return a.players_ == b.players_;
  }

 private:
  std::vector<Player> players_;
  bool has_votes_ = false;
  std::int64_t total_weight_ = 0;
};

// w(S): seat weight of a coalition. Zero for the empty coalition.
std::int64_t BlockWeight(Coalition c, const PlayerTable& table);

// Aggregated election votes of a coalition. Throws ConfigurationError when
// the table carries no votes.
std::int64_t BlockVotes(Coalition c, const PlayerTable& table);

}  // namespace pfpower

#endif  // PFPOWER_PLAYER_TABLE_H_
