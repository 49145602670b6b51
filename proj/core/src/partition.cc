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

#include "pfpower/partition.h"

#include <algorithm>
#include <string>

#include "pfpower/errors.h"

namespace pfpower {
namespace {

void CheckPlayerCount(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw MalformedInputError("partition player count " + std::to_string(n) +
                              " outside [1, " + std::to_string(kMaxPlayers) +
                              "]");
  }
}

}  // namespace

Partition Partition::FromBlocks(int n, std::span<const Coalition> blocks) {
  CheckPlayerCount(n);
  Partition p;
  p.n_ = static_cast<std::uint8_t>(n);
  Coalition seen;
  for (Coalition b : blocks) {
    if (b.empty()) continue;
    if (!b.IsSubsetOf(Coalition::Full(n))) {
      throw MalformedInputError("block names a player outside {0.." +
                                std::to_string(n - 1) + "}");
    }
    if (b.Intersects(seen)) {
      throw MalformedInputError("partition blocks overlap");
    }
    seen = seen | b;
    p.blocks_[p.count_++] = b;
  }
  if (seen != Coalition::Full(n)) {
    throw MalformedInputError("partition blocks do not cover every player");
  }
  std::sort(p.blocks_.begin(), p.blocks_.begin() + p.count_,
            [](Coalition a, Coalition b) { return a.lowest() < b.lowest(); });
  return p;
}

Partition Partition::FromRestrictedGrowth(std::span<const std::uint8_t> rgs) {
  const int n = static_cast<int>(rgs.size());
  CheckPlayerCount(n);
  Partition p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int b = rgs[i];
    if (b > p.count_) {
      throw MalformedInputError("not a restricted growth string");
    }
    if (b == p.count_) ++p.count_;
    p.blocks_[b] = p.blocks_[b].With(i);
  }
  return p;
}

Partition Partition::Coarsest(int n) {
  CheckPlayerCount(n);
  Partition p;
  p.n_ = static_cast<std::uint8_t>(n);
  p.count_ = 1;
  p.blocks_[0] = Coalition::Full(n);
  return p;
}

Coalition Partition::BlockOf(int player) const {
  for (Coalition b : blocks()) {
    if (b.contains(player)) return b;
  }
  throw MalformedInputError("player " + std::to_string(player) +
                            " not in partition");
}

bool Partition::HasBlock(Coalition c) const {
  return std::find(blocks_.begin(), blocks_.begin() + count_, c) !=
         blocks_.begin() + count_;
}

std::array<std::uint8_t, kMaxPlayers> Partition::RestrictedGrowth() const {
  std::array<std::uint8_t, kMaxPlayers> rgs{};
  for (int k = 0; k < count_; ++k) {
    for (int m : blocks_[k].members()) rgs[m] = static_cast<std::uint8_t>(k);
  }
  return rgs;
}

bool operator==(const Partition& a, const Partition& b) {
  return a.n_ == b.n_ && a.count_ == b.count_ &&
         std::equal(a.blocks_.begin(), a.blocks_.begin() + a.count_,
                    b.blocks_.begin());
}

bool PresentationLess(const Partition& a, const Partition& b) {
  auto x = a.blocks();
  auto y = b.blocks();
  return std::lexicographical_compare(
      x.begin(), x.end(), y.begin(), y.end(),
      [](Coalition l, Coalition r) { return PresentationLess(l, r); });
}

EmbeddedCoalition EmbeddedCoalition::Make(Coalition active,
                                          const Partition& partition) {
  if (!active.empty() && !partition.HasBlock(active)) {
    throw MalformedInputError("active coalition is not a block of the partition");
  }
  return EmbeddedCoalition{active, partition};
}

bool PresentationLess(const EmbeddedCoalition& a, const EmbeddedCoalition& b) {
  if (a.active != b.active) return PresentationLess(a.active, b.active);
  return PresentationLess(a.partition, b.partition);
}

}  // namespace pfpower
