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

#ifndef PFPOWER_REPORT_H_
#define PFPOWER_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "pfpower/game_spec.h"
#include "pfpower/games.h"
#include "pfpower/indices.h"

namespace pfpower {

enum class OutputFormat { kTable, kCsv, kJson };

// Accepts "table", "csv", "json". Throws ValidationError.
OutputFormat ParseOutputFormat(std::string_view text);

// Output is byte-for-byte deterministic for a given input. Tables are
// aligned UTF-8 text; CSV follows RFC 4180 (CRLF, quoted where needed); JSON
// carries exact rationals as {"num", "den"} next to the rounded string.

std::string RenderMwec(const GameSpec& spec, const MwcSet& set,
                       OutputFormat format);

std::string RenderTies(const GameSpec& spec,
                       const std::vector<TiedPartition>& ties,
                       OutputFormat format);

std::string RenderIndices(const GameSpec& spec,
                          const std::vector<IndexVector>& indices,
                          OutputFormat format);

// One period of a longitudinal comparison.
struct ComparisonColumn {
  std::string label;
  std::string title;
  PlayerTable table;
  std::vector<IndexVector> indices;
};

// Rows are (player, index) pairs, players in order of first appearance;
// columns are periods. Each period after the first also shows the change
// from the previous one.
std::string RenderComparison(const std::vector<ComparisonColumn>& columns,
                             OutputFormat format);

std::string RenderValidation(const GameSpec& spec, OutputFormat format);

}  // namespace pfpower

#endif  // PFPOWER_REPORT_H_
