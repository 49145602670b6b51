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

#ifndef PFPOWER_ENUMERATION_H_
#define PFPOWER_ENUMERATION_H_

#include <array>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "pfpower/coalition.h"
#include "pfpower/partition.h"

namespace pfpower {

// Throws CapacityError unless 1 <= n <= capacity and capacity <= kMaxPlayers.
void CheckCapacity(int n, int capacity = kDefaultCapacity);

// Lazily walks every partition of {0..n-1} in lexicographic order of
// restricted growth strings. Optionally restricted to the strings that start
// with a fixed prefix; distinct prefixes of equal length give disjoint
// streams whose union is the full stream.
//
// Single consumer. Use as a range:
//
//   for (const Partition& p : PartitionEnumerator(6)) { ... }
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n, int capacity = kDefaultCapacity);
  PartitionEnumerator(int n, std::span<const std::uint8_t> prefix,
                      int capacity = kDefaultCapacity);

  // Moves to the next partition. Returns false once exhausted. The first
  // call positions on the first partition.
  bool Next();

  const Partition& current() const { return current_; }
  std::span<const std::uint8_t> restricted_growth() const {
    return std::span<const std::uint8_t>(rgs_.data(), n_);
  }

  class Iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    Iterator() = default;
    explicit Iterator(PartitionEnumerator* e) : e_(e) { Advance(); }
    const Partition& operator*() const { return e_->current(); }
    const Partition* operator->() const { return &e_->current(); }
    Iterator& operator++() {
      Advance();
      return *this;
    }
    void operator++(int) { Advance(); }
    friend bool operator==(const Iterator& it, std::default_sentinel_t) {
      return it.e_ == nullptr;
    }

   private:
    void Advance() {
      if (!e_->Next()) e_ = nullptr;
    }
    PartitionEnumerator* e_ = nullptr;
  };

  Iterator begin() { return Iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  void Rebuild();

  int n_;
  int fixed_;
  bool started_ = false;
  bool done_ = false;
  std::array<std::uint8_t, kMaxPlayers> rgs_{};
  // blocks_used_[i]: number of distinct blocks among rgs_[0..i].
  std::array<std::uint8_t, kMaxPlayers> blocks_used_{};
  Partition current_;
};

// Walks every embedded coalition (S;P) with S non-empty: for each partition
// in PartitionEnumerator order, each of its blocks in canonical order.
class EmbeddedCoalitionEnumerator {
 public:
  explicit EmbeddedCoalitionEnumerator(int n, int capacity = kDefaultCapacity);

  bool Next();
  EmbeddedCoalition current() const;

  class Iterator {
   public:
    using value_type = EmbeddedCoalition;
    using difference_type = std::ptrdiff_t;

    Iterator() = default;
    explicit Iterator(EmbeddedCoalitionEnumerator* e) : e_(e) { Advance(); }
    EmbeddedCoalition operator*() const { return e_->current(); }
    Iterator& operator++() {
      Advance();
      return *this;
    }
    void operator++(int) { Advance(); }
    friend bool operator==(const Iterator& it, std::default_sentinel_t) {
      return it.e_ == nullptr;
    }

   private:
    void Advance() {
      if (!e_->Next()) e_ = nullptr;
    }
    EmbeddedCoalitionEnumerator* e_ = nullptr;
  };

  Iterator begin() { return Iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  PartitionEnumerator partitions_;
  int block_ = -1;
};

// Every restricted growth string of length `depth` (1 <= depth <= n); used to
// split the partition stream into independent chunks.
std::vector<std::vector<std::uint8_t>> RestrictedGrowthPrefixes(int depth);

// (S;P) is included in (T;Q) iff S is a subset of T and every block of Q
// other than T lies inside some block of P. The smaller side has the larger
// active coalition's complement grouped more coarsely.
//
// Throws MalformedInputError when the two are over different player sets.
bool IsEcSubset(const EmbeddedCoalition& a, const EmbeddedCoalition& b);
bool IsProperEcSubset(const EmbeddedCoalition& a, const EmbeddedCoalition& b);

namespace detail {

// Mask-level inclusion test. `p` and `q` list all blocks of the respective
// partitions (active included); blocks need not be in canonical order.
inline bool EcIncluded(Coalition s, std::span<const Coalition> p, Coalition t,
                       std::span<const Coalition> q) {
  if (!s.IsSubsetOf(t)) return false;
  for (Coalition outside : q) {
    if (outside == t || outside.empty()) continue;
    bool covered = false;
    for (Coalition b : p) {
      if (outside.IsSubsetOf(b)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace detail

// Calls fn(active, blocks) for each elementary step below (S;P):
//   - two blocks outside S merged into one;
//   - one member of S (when |S| >= 2) split off as a singleton block.
// Each result is a proper subset of (S;P) in the inclusion order, and every
// proper subset is reachable by a chain of such steps. `blocks` lists every
// block of P, active included. Stops early when fn returns true; returns
// whether it stopped.
template <typename Fn>
bool ForEachElementaryDescent(Coalition active,
                              std::span<const Coalition> blocks, Fn&& fn) {
  std::array<Coalition, kMaxPlayers + 1> scratch{};
  const int k = static_cast<int>(blocks.size());
  for (int b = 0; b < k; ++b) {
    if (blocks[b] == active) continue;
    for (int c = b + 1; c < k; ++c) {
      if (blocks[c] == active) continue;
      int m = 0;
      for (int x = 0; x < k; ++x) {
        if (x != b && x != c) scratch[m++] = blocks[x];
      }
      scratch[m++] = blocks[b] | blocks[c];
      if (fn(active, std::span<const Coalition>(scratch.data(), m))) {
        return true;
      }
    }
  }
  if (active.size() >= 2) {
    for (int player : active.members()) {
      const Coalition smaller = active.Without(player);
      int m = 0;
      for (int x = 0; x < k; ++x) {
        scratch[m++] = blocks[x] == active ? smaller : blocks[x];
      }
      scratch[m++] = Coalition::Singleton(player);
      if (fn(smaller, std::span<const Coalition>(scratch.data(), m))) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace pfpower

#endif  // PFPOWER_ENUMERATION_H_
