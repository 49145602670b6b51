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

#include "pfpower/enumeration.h"

#include <string>

#include "pfpower/errors.h"

namespace pfpower {

void CheckCapacity(int n, int capacity) {
  if (capacity > kMaxPlayers) {
    throw CapacityError("capacity override " + std::to_string(capacity) +
                        " exceeds the hard limit of " +
                        std::to_string(kMaxPlayers) + " players");
  }
  if (n < 1) {
    throw CapacityError("player count must be at least 1, got " +
                        std::to_string(n));
  }
  if (n > capacity) {
    throw CapacityError(std::to_string(n) + " players exceed the capacity of " +
                        std::to_string(capacity) +
                        " (raise it explicitly, up to " +
                        std::to_string(kMaxPlayers) + ")");
  }
}

PartitionEnumerator::PartitionEnumerator(int n, int capacity)
    : PartitionEnumerator(n, {}, capacity) {}

PartitionEnumerator::PartitionEnumerator(int n,
                                         std::span<const std::uint8_t> prefix,
                                         int capacity)
    : n_(n), fixed_(static_cast<int>(prefix.size())) {
  CheckCapacity(n, capacity);
  if (fixed_ > n) {
    throw MalformedInputError("prefix longer than the player count");
  }
  int used = 0;
  for (int i = 0; i < n; ++i) {
    const int b = i < fixed_ ? prefix[i] : 0;
    if (b > used) {
      throw MalformedInputError("prefix is not a restricted growth string");
    }
    if (b == used) ++used;
    rgs_[i] = static_cast<std::uint8_t>(b);
    blocks_used_[i] = static_cast<std::uint8_t>(used);
  }
  current_.n_ = static_cast<std::uint8_t>(n);
}

bool PartitionEnumerator::Next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    Rebuild();
    return true;
  }
  // Rightmost free position that can still grow; position 0 is always 0.
  for (int i = n_ - 1; i >= std::max(fixed_, 1); --i) {
    if (rgs_[i] < blocks_used_[i - 1]) {
      ++rgs_[i];
      blocks_used_[i] = std::max<std::uint8_t>(blocks_used_[i - 1],
                                               rgs_[i] + 1);
      for (int j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        blocks_used_[j] = blocks_used_[i];
      }
      Rebuild();
      return true;
    }
  }
  done_ = true;
  return false;
}

void PartitionEnumerator::Rebuild() {
  const int k = blocks_used_[n_ - 1];
  for (int b = 0; b < k; ++b) current_.blocks_[b] = Coalition();
  for (int i = 0; i < n_; ++i) {
    current_.blocks_[rgs_[i]] = current_.blocks_[rgs_[i]].With(i);
  }
  current_.count_ = static_cast<std::uint8_t>(k);
}

EmbeddedCoalitionEnumerator::EmbeddedCoalitionEnumerator(int n, int capacity)
    : partitions_(n, capacity) {}

bool EmbeddedCoalitionEnumerator::Next() {
  if (block_ >= 0 && block_ + 1 < partitions_.current().block_count()) {
    ++block_;
    return true;
  }
  if (!partitions_.Next()) return false;
  block_ = 0;
  return true;
}

EmbeddedCoalition EmbeddedCoalitionEnumerator::current() const {
  const Partition& p = partitions_.current();
  return EmbeddedCoalition{p.block(block_), p};
}

std::vector<std::vector<std::uint8_t>> RestrictedGrowthPrefixes(int depth) {
  if (depth < 1 || depth > kMaxPlayers) {
    throw MalformedInputError("prefix depth out of range");
  }
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> rgs(depth, 0);
  auto extend = [&](auto&& self, int pos, int used) -> void {
    if (pos == depth) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[pos] = static_cast<std::uint8_t>(b);
      self(self, pos + 1, b == used ? used + 1 : used);
    }
  };
  extend(extend, 1, 1);
  return out;
}

bool IsEcSubset(const EmbeddedCoalition& a, const EmbeddedCoalition& b) {
  if (a.player_count() != b.player_count()) {
    throw MalformedInputError(
        "embedded coalitions over different player sets (" +
        std::to_string(a.player_count()) + " vs " +
        std::to_string(b.player_count()) + " players)");
  }
  return detail::EcIncluded(a.active, a.partition.blocks(), b.active,
                            b.partition.blocks());
}

bool IsProperEcSubset(const EmbeddedCoalition& a, const EmbeddedCoalition& b) {
  return IsEcSubset(a, b) && !(a == b);
}

}  // namespace pfpower
