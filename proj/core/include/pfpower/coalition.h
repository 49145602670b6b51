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

#ifndef PFPOWER_COALITION_H_
#define PFPOWER_COALITION_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace pfpower {

// Hard upper bound on the number of players any structure can hold.
inline constexpr int kMaxPlayers = 15;

// Default limit on players for anything that enumerates partitions. Bell(13)
// is already 27.6 million, so larger games need an explicit override.
inline constexpr int kDefaultCapacity = 12;

// A set of players, stored as a bitset over dense player indices. The empty
// coalition is a valid value.
class Coalition {
 public:
  using Mask = std::uint32_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask mask) : mask_(mask) {}

  static constexpr Coalition Singleton(int player) {
    return Coalition(Mask{1} << player);
  }
  // {0, ..., n-1}.
  static constexpr Coalition Full(int n) {
    return Coalition(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static Coalition FromMembers(const std::vector<int>& members) {
    Coalition c;
    for (int m : members) c = c.With(m);
    return c;
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const {
    return (mask_ >> player) & Mask{1};
  }
  // Smallest member index; -1 for the empty coalition.
  constexpr int lowest() const {
    return empty() ? -1 : std::countr_zero(mask_);
  }
  // One past the largest member index; 0 for the empty coalition.
  constexpr int span() const { return 32 - std::countl_zero(mask_); }

  constexpr bool IsSubsetOf(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool Intersects(Coalition other) const {
    return (mask_ & other.mask_) != 0;
  }
  constexpr Coalition With(int player) const {
    return Coalition(mask_ | (Mask{1} << player));
  }
  constexpr Coalition Without(int player) const {
    return Coalition(mask_ & ~(Mask{1} << player));
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  // Set difference a \ b.
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  Mask mask_ = 0;
};

// Presentation order: smaller coalitions first, then lexicographic over the
// sorted member indices.
inline bool PresentationLess(Coalition a, Coalition b) {
  if (a.size() != b.size()) return a.size() < b.size();
  Coalition::Mask x = a.mask();
  Coalition::Mask y = b.mask();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x);
    int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

}  // namespace pfpower

#endif  // PFPOWER_COALITION_H_
