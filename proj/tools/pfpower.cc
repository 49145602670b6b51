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

// Command-line front end: minimal winning (embedded) coalitions, tie
// reports, power indices and period comparisons for weighted majority games.
//
//   pfpower mwec --fixture may_2021
//   pfpower indices --spec game.json --index dp --index hcm --format json
//   pfpower compare jun_2021 jul_2021 dec_2021 --index cm
//
// Exit status: 0 on success, 2 for invalid input or configuration, 3 when
// the game exceeds the capacity limit, 1 for usage and other errors.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfpower/enumeration.h"
#include "pfpower/errors.h"
#include "pfpower/fixtures.h"
#include "pfpower/games.h"
#include "pfpower/indices.h"
#include "pfpower/report.h"
#include "pfpower/spec_io.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;

struct GlobalOptions {
  std::string format = "table";
  std::string fixture;
  std::string spec_path;
  std::string players_path;
  std::optional<std::int64_t> quota;
  std::string tie_rule;
  int capacity = pfpower::kDefaultCapacity;
  int threads = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

pfpower::GameSpec ResolveSpec(const GlobalOptions& opts) {
  const int sources = !opts.fixture.empty() + !opts.spec_path.empty() +
                      !opts.players_path.empty();
  if (sources != 1) {
    throw UsageError(
        "exactly one of --fixture, --spec or --players is required");
  }
  if (opts.quota && opts.players_path.empty()) {
    throw UsageError("--quota only applies to --players input");
  }

  std::optional<pfpower::GameSpec> spec;
  if (!opts.fixture.empty()) {
    spec = pfpower::FindFixture(opts.fixture).Spec();
    pfpower::CheckCapacity(spec->player_count(), opts.capacity);
  } else if (!opts.spec_path.empty()) {
    spec = pfpower::LoadSpecFile(opts.spec_path, opts.capacity);
  } else {
    std::ifstream in(opts.players_path);
    if (!in) {
      throw pfpower::MalformedInputError("cannot open " + opts.players_path);
    }
    pfpower::PlayerTable table = pfpower::LoadPlayersCsv(in);
    pfpower::CheckCapacity(table.size(), opts.capacity);
    if (opts.quota) {
      spec.emplace(std::move(table), pfpower::CharacteristicForm{*opts.quota});
    } else {
      spec.emplace(std::move(table),
                   pfpower::PartitionForm{pfpower::TieRule::kTiesLose});
    }
  }

  if (!opts.tie_rule.empty()) {
    const pfpower::TieRule rule = pfpower::ParseTieRule(opts.tie_rule);
    if (spec->form() != pfpower::GameForm::kPartition) {
      throw pfpower::FormMismatchError(
          "--tie-rule applies to partition-form games only");
    }
    pfpower::PlayerTable table = spec->table();
    spec.emplace(std::move(table), pfpower::PartitionForm{rule});
  }
  return *std::move(spec);
}

pfpower::EnumerationOptions Enumeration(const GlobalOptions& opts) {
  return pfpower::EnumerationOptions{.capacity = opts.capacity,
                                     .threads = opts.threads};
}

pfpower::MwcSet MinimalSet(const pfpower::GameSpec& spec,
                           const GlobalOptions& opts) {
  if (spec.form() == pfpower::GameForm::kCharacteristic) {
    return pfpower::MinimalWinningCoalitions(spec);
  }
  return pfpower::MinimalWinningEmbeddedCoalitions(spec, Enumeration(opts));
}

std::vector<pfpower::IndexKind> SelectedIndices(
    const std::vector<std::string>& names) {
  std::vector<pfpower::IndexKind> kinds;
  if (names.empty()) {
    kinds.assign(std::begin(pfpower::kAllIndices),
                 std::end(pfpower::kAllIndices));
    return kinds;
  }
  for (const auto& name : names) {
    const pfpower::IndexKind kind = pfpower::ParseIndexKind(name);
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
      kinds.push_back(kind);
    }
  }
  return kinds;
}

std::vector<pfpower::IndexVector> ComputeIndices(
    const pfpower::GameSpec& spec, const pfpower::MwcSet& set,
    const std::vector<pfpower::IndexKind>& kinds) {
  std::vector<pfpower::IndexVector> out;
  for (pfpower::IndexKind kind : kinds) {
    out.push_back(pfpower::ComputeIndex(kind, set, spec.table()));
  }
  return out;
}

void AddSourceOptions(CLI::App* cmd, GlobalOptions& opts) {
  cmd->add_option("--fixture", opts.fixture, "Bundled period fixture label");
  cmd->add_option("--spec", opts.spec_path, "JSON game document");
  cmd->add_option("--players", opts.players_path,
                  "Players CSV (id,weight[,votes])");
  cmd->add_option("--quota", opts.quota,
                  "Quota for --players input; selects characteristic form");
  cmd->add_option("--tie-rule", opts.tie_rule,
                  "Override: ties_lose, ties_all_win or votes");
}

int Run(int argc, char** argv) {
  CLI::App app{"Minimal winning embedded coalitions and power indices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pfpower 0.1.0");

  // Global options may appear before or after the verb; subcommands inherit
  // this setting when they are created.
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--capacity", opts.capacity,
                 "Largest player count accepted (at most 15)")
      ->capture_default_str();
  app.add_option("--threads", opts.threads,
                 "Worker threads for partition scans (0: automatic)")
      ->check(CLI::NonNegativeNumber);

  auto* mwec = app.add_subcommand(
      "mwec", "List minimal winning (embedded) coalitions");
  auto* ties = app.add_subcommand("ties", "List partitions with tied blocks");
  auto* indices = app.add_subcommand("indices", "Compute power indices");
  auto* compare = app.add_subcommand(
      "compare", "Compare power indices across bundled periods");
  auto* validate = app.add_subcommand("validate", "Validate a game");
  for (auto* cmd : {mwec, ties, indices, validate}) {
    AddSourceOptions(cmd, opts);
  }
  std::vector<std::string> index_names;
  for (auto* cmd : {indices, compare}) {
    cmd->add_option("--index", index_names,
                    "dp, pg, cm or hcm (repeatable; default all)");
  }
  std::vector<std::string> labels;
  compare->add_option("labels", labels, "Fixture labels, in period order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const pfpower::OutputFormat format = pfpower::ParseOutputFormat(opts.format);
  if (*compare) {
    if (labels.size() < 2) {
      throw UsageError("compare needs at least two fixture labels");
    }
    const auto kinds = SelectedIndices(index_names);
    std::vector<pfpower::ComparisonColumn> columns;
    for (const auto& label : labels) {
      const pfpower::PeriodFixture& fixture = pfpower::FindFixture(label);
      const pfpower::GameSpec spec = fixture.Spec();
      pfpower::CheckCapacity(spec.player_count(), opts.capacity);
      columns.push_back({fixture.label, fixture.title, spec.table(),
                         ComputeIndices(spec, MinimalSet(spec, opts), kinds)});
    }
    std::cout << pfpower::RenderComparison(columns, format);
    return 0;
  }

  const pfpower::GameSpec spec = ResolveSpec(opts);
  if (*validate) {
    std::cout << pfpower::RenderValidation(spec, format);
  } else if (*mwec) {
    std::cout << pfpower::RenderMwec(spec, MinimalSet(spec, opts), format);
  } else if (*ties) {
    std::cout << pfpower::RenderTies(
        spec, pfpower::TiedPartitions(spec, Enumeration(opts)), format);
  } else if (*indices) {
    const auto kinds = SelectedIndices(index_names);
    std::cout << pfpower::RenderIndices(
        spec, ComputeIndices(spec, MinimalSet(spec, opts), kinds), format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pfpower::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const pfpower::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
