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

#ifndef PFPOWER_INDICES_H_
#define PFPOWER_INDICES_H_

#include <string_view>
#include <utility>
#include <vector>

#include "pfpower/games.h"
#include "pfpower/player_table.h"
#include "pfpower/rational.h"

namespace pfpower {

enum class IndexKind {
  kDeeganPackel,           // "dp"
  kPublicGood,             // "pg"
  kColomerMartinez,        // "cm"
  kHollerColomerMartinez,  // "hcm"
};

inline constexpr IndexKind kAllIndices[] = {
    IndexKind::kDeeganPackel, IndexKind::kPublicGood,
    IndexKind::kColomerMartinez, IndexKind::kHollerColomerMartinez};

std::string_view ToString(IndexKind kind);
// Throws ValidationError for anything but dp, pg, cm, hcm.
IndexKind ParseIndexKind(std::string_view text);

// Per-player power for one index, in player-table order.
struct IndexVector {
  IndexKind kind;
  GameForm form;
  std::vector<Rational> values;

  Rational Sum() const;
};

// All four throw DegenerateGameError on an empty minimal winning set. The
// same formulas serve both forms; in partition form only the active
// coalition of each element matters.

// DP_i = (1/|M|) * sum over elements containing i of 1/|S|.
IndexVector DeeganPackel(const MwcSet& set);
// PG_i = |M_i| / sum_j |M_j|.
IndexVector PublicGood(const MwcSet& set);
// CM_i = (1/|M|) * sum over elements containing i of w_i / w(S).
// Throws DegenerateGameError if some element has zero weight.
IndexVector ColomerMartinez(const MwcSet& set, const PlayerTable& table);
// HCM_i = |M_i| w_i / sum_j |M_j| w_j.
// Throws DegenerateGameError if the denominator is zero.
IndexVector HollerColomerMartinez(const MwcSet& set, const PlayerTable& table);
// HCM_i as sum over elements containing i of w_i, divided by the total
// weight of all elements. Agrees with HollerColomerMartinez exactly.
IndexVector HollerColomerMartinezAlternative(const MwcSet& set,
                                             const PlayerTable& table);

IndexVector ComputeIndex(IndexKind kind, const MwcSet& set,
                         const PlayerTable& table);

// Players appearing in no element.
Coalition NullPlayers(const MwcSet& set);

// Unordered pairs (i < j) such that for every losing S avoiding both,
// S + i wins iff S + j wins.
std::vector<std::pair<int, int>> SymmetricPairs(const CharacteristicGame& game);
// Throws FormMismatchError for partition-form specs.
std::vector<std::pair<int, int>> SymmetricPairsCharacteristic(
    const GameSpec& spec);

// Symmetry in partition form, evaluated literally: for every (S;P) with S
// avoiding i and j (S may be empty), moving i from P(i) into S must win
// exactly when moving j from P(j) into S does. The boundary case P(i) = P(j)
// is not settled by the definition, so the check is also reported with
// those partitions left out; pairs where the two disagree need review.
struct PartitionSymmetry {
  int first;
  int second;
  bool symmetric;
  bool symmetric_when_apart;

  bool NeedsReview() const { return symmetric != symmetric_when_apart; }
};
std::vector<PartitionSymmetry> SymmetricPairsPartition(
    const PartitionGame& game, const EnumerationOptions& options = {});

struct WeightedSymmetryCheck {
  bool applicable;  // the set has exactly one element
  bool holds;       // true when not applicable
};

// w_j f_i = w_i f_j for all i, j in the unique minimal winning coalition.
WeightedSymmetryCheck CheckWeightedSymmetry(const IndexVector& index,
                                            const MwcSet& set,
                                            const PlayerTable& table);

// Verify the merge decompositions of DP and PG for the union of two
// mergeable games. Throw NotMergeableError otherwise.
bool DeeganPackelMergeCheck(const CharacteristicGame& a,
                            const CharacteristicGame& b);
bool PublicGoodMergeCheck(const CharacteristicGame& a,
                          const CharacteristicGame& b);

}  // namespace pfpower

#endif  // PFPOWER_INDICES_H_
