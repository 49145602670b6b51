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

#ifndef PFPOWER_SPEC_IO_H_
#define PFPOWER_SPEC_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pfpower/game_spec.h"
#include "pfpower/partition.h"

namespace pfpower {

inline constexpr int kSchemaVersion = 1;

// Game documents are JSON:
//
//   {
//     "schema_version": 1,
//     "players": [{"id": "A", "weight": 3, "votes": 1200}, ...],
//     "form": "partition",            // or "characteristic"
//     "tie_rule": "votes",            // partition form; default ties_lose
//     "quota": 4                      // characteristic form; required
//   }
//
// Errors: ParseError (line/column) for malformed JSON, ValidationError with
// a field path for schema violations, ConfigurationError for the vote rule
// without votes, CapacityError when the player count exceeds `capacity`.
GameSpec ParseSpec(std::string_view text, int capacity = kDefaultCapacity);
GameSpec LoadSpec(std::istream& in, int capacity = kDefaultCapacity);
GameSpec LoadSpecFile(const std::string& path,
                      int capacity = kDefaultCapacity);

// Deterministic: players in table order, keys in schema order.
std::string SerializeSpec(const GameSpec& spec);

// Players table as CSV with header "id,weight,votes" (the votes column may
// be omitted, or left blank on every row).
PlayerTable ParsePlayersCsv(std::string_view text);
PlayerTable LoadPlayersCsv(std::istream& in);

// "{UNES, MUPP}" <-> Coalition, members written in table order.
std::string FormatCoalition(Coalition c, const PlayerTable& table);
// Blocks in canonical order joined by ", ".
std::string FormatPartition(const Partition& p, const PlayerTable& table);

// Reads a list of brace-delimited coalitions, e.g. "{A, B}, {C}". Separators
// between braces are ignored. Throws MalformedInputError.
std::vector<Coalition> ParseCoalitionList(std::string_view text,
                                          const PlayerTable& table);
// "{A} | {A}, {B, C}": active coalition, '|', then the partition blocks.
EmbeddedCoalition ParseEmbeddedCoalition(std::string_view text,
                                         const PlayerTable& table);

}  // namespace pfpower

#endif  // PFPOWER_SPEC_IO_H_
