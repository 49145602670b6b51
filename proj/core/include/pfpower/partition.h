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

#ifndef PFPOWER_PARTITION_H_
#define PFPOWER_PARTITION_H_

#include <array>
#include <cstdint>
#include <span>

#include "pfpower/coalition.h"

namespace pfpower {

// A partition of {0, ..., n-1} into non-empty, pairwise disjoint blocks.
//
// Always stored canonically: blocks ordered by their smallest member. The
// empty block is never stored. Storage is inline, so partitions are cheap
// value types.
class Partition {
 public:
  // Throws MalformedInputError unless `blocks` is a partition of {0..n-1}.
  // Empty blocks are dropped; order is irrelevant.
  static Partition FromBlocks(int n, std::span<const Coalition> blocks);
  static Partition FromBlocks(int n, std::initializer_list<Coalition> blocks) {
    return FromBlocks(n, std::span<const Coalition>(blocks.begin(),
                                                    blocks.size()));
  }
  // Builds the partition encoded by a restricted growth string: player i
  // belongs to block rgs[i]. Throws MalformedInputError if `rgs` is not a
  // valid restricted growth string.
  static Partition FromRestrictedGrowth(std::span<const std::uint8_t> rgs);

  // The single-block partition {N}.
  static Partition Coarsest(int n);

  int player_count() const { return n_; }
  int block_count() const { return count_; }
  std::span<const Coalition> blocks() const {
    return std::span<const Coalition>(blocks_.data(), count_);
  }
  Coalition block(int k) const { return blocks_[k]; }
  // P(i): the block holding player i.
  Coalition BlockOf(int player) const;
  bool HasBlock(Coalition c) const;

  // Restricted growth string of this partition.
  std::array<std::uint8_t, kMaxPlayers> RestrictedGrowth() const;

  friend bool operator==(const Partition& a, const Partition& b);

 private:
  friend class PartitionEnumerator;
  Partition() = default;

  std::array<Coalition, kMaxPlayers> blocks_{};
  std::uint8_t count_ = 0;
  std::uint8_t n_ = 0;
};

// Lexicographic over the canonical block sequence, each block compared in
// PresentationLess order.
bool PresentationLess(const Partition& a, const Partition& b);

// (S;P): an active coalition together with a partition containing it. The
// active coalition may be empty only transiently, for evaluating v(empty;P).
struct EmbeddedCoalition {
  Coalition active;
  Partition partition;

  // Throws MalformedInputError unless `active` is empty or a block of
  // `partition`.
  static EmbeddedCoalition Make(Coalition active, const Partition& partition);

  int player_count() const { return partition.player_count(); }
  // The blocks of `partition` other than `active`.
  void ForEachOutsideBlock(auto&& fn) const {
    for (Coalition b : partition.blocks()) {
      if (b != active) fn(b);
    }
  }

  friend bool operator==(const EmbeddedCoalition&,
                         const EmbeddedCoalition&) = default;
};

// Ordering used for every listing: active size, active members, partition.
bool PresentationLess(const EmbeddedCoalition& a, const EmbeddedCoalition& b);

}  // namespace pfpower

#endif  // PFPOWER_PARTITION_H_
