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

#ifndef PFPOWER_FIXTURES_H_
#define PFPOWER_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfpower/game_spec.h"
#include "pfpower/indices.h"

namespace pfpower {

// A tied partition as published: blocks in the published order (same
// notation as ParseCoalitionList) with one seat count per block.
struct ExpectedTie {
  std::string partition;
  std::vector<std::int64_t> seats;
};

// Elements entering and leaving the minimal winning set relative to the
// previous period, in ParseEmbeddedCoalition notation.
struct MembershipChange {
  std::vector<std::string> added;
  std::vector<std::string> removed;
};

// One period of the National Assembly of Ecuador, 2021: the game and the
// published figures for it.
struct PeriodFixture {
  std::string label;
  std::string title;
  std::string document;  // JSON game document
  std::size_t mwec_count;
  // Published minimal winning embedded coalitions; empty when the period
  // was only described through its changes.
  std::vector<std::string> mwec;
  std::vector<ExpectedTie> ties;
  // Per index, four-decimal values in player-table order.
  std::vector<std::pair<IndexKind, std::vector<std::string>>> indices;
  std::optional<MembershipChange> change_from_previous;

  GameSpec Spec() const;
  const std::vector<std::string>& ExpectedIndex(IndexKind kind) const;
};

// May, June, July, 12 October, 26 October and December 2021, in that order.
const std::vector<PeriodFixture>& BundledFixtures();
std::vector<std::string> FixtureLabels();
// Throws ValidationError for unknown labels.
const PeriodFixture& FindFixture(std::string_view label);

}  // namespace pfpower

#endif  // PFPOWER_FIXTURES_H_
