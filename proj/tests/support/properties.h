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

// Randomized and exhaustive property checks over small games. Every
// sub-suite reports how many cases it ran and how many failed, so the same
// code backs both the unit tests and the acceptance report.

#ifndef PFPOWER_TESTS_SUPPORT_PROPERTIES_H_
#define PFPOWER_TESTS_SUPPORT_PROPERTIES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace pfpower::properties {

struct SuiteResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
};

struct Config {
  std::uint64_t seed = 20210524;
  int max_players = 4;
  // Random partition-form games drawn for each tie rule.
  int games_per_rule = 200;
  // Random characteristic games for the characteristic-form checks.
  int characteristic_games = 200;
  int mergeable_pairs = 50;
  int random_antichains = 200;
};

SuiteResult OrderLaws(const Config& config);
SuiteResult WinningMatchesDefinition(const Config& config);
SuiteResult UpClosure(const Config& config);
SuiteResult Antichain(const Config& config);
SuiteResult MinimalityOracle(const Config& config);
SuiteResult IndexFormulas(const Config& config);
SuiteResult Efficiency(const Config& config);
SuiteResult NullPlayer(const Config& config);
SuiteResult Symmetry(const Config& config);
SuiteResult HcmAlternative(const Config& config);
SuiteResult EqualWeights(const Config& config);
SuiteResult ScalingInvariance(const Config& config);
SuiteResult AntichainRoundTrip(const Config& config);
SuiteResult MergeIdentities(const Config& config);

std::vector<SuiteResult> RunAll(const Config& config);

}  // namespace pfpower::properties

#endif  // PFPOWER_TESTS_SUPPORT_PROPERTIES_H_
