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

#include "support/oracles.h"

#include <algorithm>
#include <bit>

namespace pfpower::oracle {
namespace {

std::int64_t Sum(const std::vector<std::int64_t>& values, Mask m) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (m >> i & 1u) total += values[i];
  }
  return total;
}

void Extend(int k, int n, Blocks& current, std::vector<Blocks>& out) {
  if (k == n) {
    out.push_back(current);
    return;
  }
  for (std::size_t b = 0; b < current.size(); ++b) {
    current[b] |= Mask{1} << k;
    Extend(k + 1, n, current, out);
    current[b] &= ~(Mask{1} << k);
  }
  current.push_back(Mask{1} << k);
  Extend(k + 1, n, current, out);
  current.pop_back();
}

}  // namespace

std::int64_t Bell(int n) {
  std::vector<std::int64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> next{row.back()};
    for (std::int64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::vector<Blocks> AllPartitions(int n) {
  std::vector<Blocks> out;
  Blocks current;
  Extend(0, n, current, out);
  return out;
}

std::vector<Ec> AllEmbeddedCoalitions(int n) {
  std::vector<Ec> out;
  for (const Blocks& p : AllPartitions(n)) {
    for (Mask b : p) out.push_back(Ec{b, p});
  }
  return out;
}

bool Included(const Ec& a, const Ec& b) {
  if ((a.active & ~b.active) != 0) return false;
  for (Mask q : b.blocks) {
    if (q == b.active) continue;
    bool inside = false;
    for (Mask p : a.blocks) {
      if ((q & ~p) == 0) inside = true;
    }
    if (!inside) return false;
  }
  return true;
}

bool SamePartition(const Blocks& a, const Blocks& b) {
  Blocks x = a;
  Blocks y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool SameEc(const Ec& a, const Ec& b) {
  return a.active == b.active && SamePartition(a.blocks, b.blocks);
}

std::vector<Ec> MinimalWinning(int n, const EcPredicate& wins) {
  const std::vector<Ec> all = AllEmbeddedCoalitions(n);
  std::vector<Ec> out;
  for (const Ec& e : all) {
    if (!wins(e)) continue;
    bool minimal = true;
    for (const Ec& f : all) {
      if (!SameEc(e, f) && Included(f, e) && wins(f)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

bool Monotone(int n, const EcPredicate& wins) {
  const std::vector<Ec> all = AllEmbeddedCoalitions(n);
  for (const Ec& a : all) {
    if (!wins(a)) continue;
    for (const Ec& b : all) {
      if (Included(a, b) && !wins(b)) return false;
    }
  }
  return true;
}

bool PluralityWins(const std::vector<std::int64_t>& weights,
                   const std::vector<std::int64_t>& votes, TieRule rule,
                   const Ec& ec) {
  if (ec.active == 0) return false;
  const std::int64_t own = Sum(weights, ec.active);
  std::vector<Mask> rivals;
  for (Mask b : ec.blocks) {
    if (b == ec.active) continue;
    const std::int64_t w = Sum(weights, b);
    if (w > own) return false;
    if (w == own) rivals.push_back(b);
  }
  if (rivals.empty()) return true;
  switch (rule) {
    case TieRule::kTiesLose:
      return false;
    case TieRule::kTiesAllWin:
      return true;
    case TieRule::kVotes:
      for (Mask b : rivals) {
        if (Sum(votes, b) >= Sum(votes, ec.active)) return false;
      }
      return true;
  }
  return false;
}

std::vector<Mask> MinimalWinningCoalitions(
    int n, const std::function<bool(Mask)>& wins) {
  std::vector<Mask> out;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask s = 1; s <= full; ++s) {
    if (!wins(s)) continue;
    bool minimal = true;
    for (Mask t = 1; t <= full; ++t) {
      if (t != s && (t & ~s) == 0 && wins(t)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<Mask> MinimalWinningCoalitions(
    const std::vector<std::int64_t>& weights, std::int64_t quota) {
  return MinimalWinningCoalitions(
      static_cast<int>(weights.size()),
      [&](Mask s) { return Sum(weights, s) >= quota; });
}

std::vector<Rational> DeeganPackel(int n, const std::vector<Mask>& actives) {
  std::vector<Rational> out(n);
  for (Mask s : actives) {
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1u) out[i] += Rational(1, std::popcount(s));
    }
  }
  for (auto& v : out) v /= static_cast<std::int64_t>(actives.size());
  return out;
}

std::vector<Rational> PublicGood(int n, const std::vector<Mask>& actives) {
  std::vector<std::int64_t> counts(n);
  std::int64_t total = 0;
  for (Mask s : actives) {
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1u) {
        ++counts[i];
        ++total;
      }
    }
  }
  std::vector<Rational> out;
  for (std::int64_t c : counts) out.emplace_back(c, total);
  return out;
}

std::vector<Rational> ColomerMartinez(const std::vector<std::int64_t>& weights,
                                      const std::vector<Mask>& actives) {
  const int n = static_cast<int>(weights.size());
  std::vector<Rational> out(n);
  for (Mask s : actives) {
    const std::int64_t ws = Sum(weights, s);
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1u) out[i] += Rational(weights[i], ws);
    }
  }
  for (auto& v : out) v /= static_cast<std::int64_t>(actives.size());
  return out;
}

std::vector<Rational> HollerColomerMartinez(
    const std::vector<std::int64_t>& weights,
    const std::vector<Mask>& actives) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::int64_t> numer(n);
  std::int64_t total = 0;
  for (Mask s : actives) {
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1u) {
        numer[i] += weights[i];
        total += weights[i];
      }
    }
  }
  std::vector<Rational> out;
  for (std::int64_t v : numer) out.emplace_back(v, total);
  return out;
}

}  // namespace pfpower::oracle
