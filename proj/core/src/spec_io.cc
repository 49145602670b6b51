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

#include "pfpower/spec_io.h"

#include <cstdint>
#include <fstream>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pfpower/errors.h"

namespace pfpower {
namespace {

using Json = nlohmann::ordered_json;

std::pair<int, int> LineColumn(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::int64_t NonNegativeInteger(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) {
    throw ValidationError(path, "expected an integer");
  }
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) {
      throw ValidationError(path, "integer out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  const auto v = value.get<std::int64_t>();
  if (v < 0) throw ValidationError(path, "must be non-negative");
  return v;
}

std::string RequireString(const Json& value, const std::string& path) {
  if (!value.is_string()) throw ValidationError(path, "expected a string");
  return value.get<std::string>();
}

void RejectUnknownKeys(const Json& object, const std::set<std::string>& known,
                       const std::string& path) {
  for (const auto& [key, _] : object.items()) {
    if (!known.contains(key)) {
      throw ValidationError(path.empty() ? key : path + "." + key,
                            "unknown field");
    }
  }
}

PlayerTable ReadPlayers(const Json& doc) {
  if (!doc.contains("players")) {
    throw ValidationError("players", "missing");
  }
  const Json& list = doc.at("players");
  if (!list.is_array()) throw ValidationError("players", "expected an array");
  if (list.empty()) {
    throw ValidationError("players", "at least one player is required");
  }
  std::vector<Player> players;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "players[" + std::to_string(i) + "]";
    const Json& entry = list[i];
    if (!entry.is_object()) throw ValidationError(path, "expected an object");
    RejectUnknownKeys(entry, {"id", "weight", "votes"}, path);
    if (!entry.contains("id")) throw ValidationError(path + ".id", "missing");
    if (!entry.contains("weight")) {
      throw ValidationError(path + ".weight", "missing");
    }
    Player p;
    p.id = RequireString(entry.at("id"), path + ".id");
    p.weight = NonNegativeInteger(entry.at("weight"), path + ".weight");
    if (entry.contains("votes") && !entry.at("votes").is_null()) {
      p.votes = NonNegativeInteger(entry.at("votes"), path + ".votes");
    }
    players.push_back(std::move(p));
  }
  return PlayerTable(std::move(players));
}

std::vector<std::string> SplitCsvLine(std::string_view line, int row) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"' && field.empty()) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) throw ParseError(row, static_cast<int>(line.size()), "unterminated quote");
  fields.push_back(std::move(field));
  return fields;
}

std::int64_t ParseCsvInteger(const std::string& text, const std::string& path) {
  if (text.empty()) throw ValidationError(path, "empty value");
  std::int64_t value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw ValidationError(path, "expected a non-negative integer, got '" +
                                      text + "'");
    }
    if (value > (INT64_MAX - (ch - '0')) / 10) {
      throw ValidationError(path, "integer out of range");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

GameSpec ParseSpec(std::string_view text, int capacity) {
  if (capacity < 1 || capacity > kMaxPlayers) {
    throw CapacityError("capacity " + std::to_string(capacity) +
                        " outside [1, " + std::to_string(kMaxPlayers) + "]");
  }
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] =
        LineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, e.what());
  }
  if (!doc.is_object()) throw ValidationError("", "document must be an object");
  RejectUnknownKeys(doc, {"schema_version", "players", "form", "quota",
                          "tie_rule"},
                    "");
  if (!doc.contains("schema_version")) {
    throw ValidationError("schema_version", "missing");
  }
  if (NonNegativeInteger(doc.at("schema_version"), "schema_version") !=
      kSchemaVersion) {
    throw ValidationError("schema_version",
                          "unsupported (expected " +
                              std::to_string(kSchemaVersion) + ")");
  }
  PlayerTable table = ReadPlayers(doc);
  if (table.size() > capacity) {
    throw CapacityError(std::to_string(table.size()) +
                        " players exceed the capacity of " +
                        std::to_string(capacity));
  }
  if (!doc.contains("form")) throw ValidationError("form", "missing");
  const std::string form = RequireString(doc.at("form"), "form");
  if (form == "characteristic") {
    if (doc.contains("tie_rule")) {
      throw ValidationError("tie_rule", "not allowed for characteristic form");
    }
    if (!doc.contains("quota")) throw ValidationError("quota", "missing");
    const std::int64_t quota = NonNegativeInteger(doc.at("quota"), "quota");
    return GameSpec(std::move(table), CharacteristicForm{quota});
  }
  if (form == "partition") {
    if (doc.contains("quota")) {
      throw ValidationError("quota", "not allowed for partition form");
    }
    TieRule rule = TieRule::kTiesLose;
    if (doc.contains("tie_rule")) {
      rule = ParseTieRule(RequireString(doc.at("tie_rule"), "tie_rule"));
    }
    return GameSpec(std::move(table), PartitionForm{rule});
  }
  throw ValidationError("form", "expected 'characteristic' or 'partition', "
                                "got '" + form + "'");
}

GameSpec LoadSpec(std::istream& in, int capacity) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return ParseSpec(text, capacity);
}

GameSpec LoadSpecFile(const std::string& path, int capacity) {
  std::ifstream in(path);
  if (!in) throw ValidationError("", "cannot open '" + path + "'");
  return LoadSpec(in, capacity);
}

std::string SerializeSpec(const GameSpec& spec) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  Json players = Json::array();
  for (const Player& p : spec.table().players()) {
    Json entry;
    entry["id"] = p.id;
    entry["weight"] = p.weight;
    if (p.votes.has_value()) entry["votes"] = *p.votes;
    players.push_back(std::move(entry));
  }
  doc["players"] = std::move(players);
  doc["form"] = std::string(ToString(spec.form()));
  if (spec.form() == GameForm::kCharacteristic) {
    doc["quota"] = spec.quota();
  } else {
    doc["tie_rule"] = std::string(ToString(spec.tie_rule()));
  }
  return doc.dump(2) + "\n";
}

PlayerTable ParsePlayersCsv(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string current;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(std::move(current));
        current.clear();
      } else if (ch != '\r') {
        current.push_back(ch);
      }
    }
    if (!current.empty()) lines.push_back(std::move(current));
  }
  while (!lines.empty() && Trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ValidationError("header", "empty players file");

  const auto header = SplitCsvLine(lines[0], 1);
  std::vector<std::string> names;
  for (const auto& h : header) names.push_back(Trim(h));
  const bool with_votes_column =
      names == std::vector<std::string>{"id", "weight", "votes"};
  if (!with_votes_column &&
      names != std::vector<std::string>{"id", "weight"}) {
    throw ValidationError("header", "expected 'id,weight,votes'");
  }

  std::vector<Player> players;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::string path = "players[" + std::to_string(r - 1) + "]";
    const auto fields = SplitCsvLine(lines[r], static_cast<int>(r + 1));
    if (fields.size() != names.size()) {
      throw ValidationError(path, "expected " + std::to_string(names.size()) +
                                      " fields, got " +
                                      std::to_string(fields.size()));
    }
    Player p;
    p.id = Trim(fields[0]);
    p.weight = ParseCsvInteger(Trim(fields[1]), path + ".weight");
    if (with_votes_column && !Trim(fields[2]).empty()) {
      p.votes = ParseCsvInteger(Trim(fields[2]), path + ".votes");
    }
    players.push_back(std::move(p));
  }
  return PlayerTable(std::move(players));
}

PlayerTable LoadPlayersCsv(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return ParsePlayersCsv(text);
}

std::string FormatCoalition(Coalition c, const PlayerTable& table) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : table.IdsOf(c)) {
    if (!first) out += ", ";
    out += id;
    first = false;
  }
  return out + "}";
}

std::string FormatPartition(const Partition& p, const PlayerTable& table) {
  std::string out;
  for (Coalition b : p.blocks()) {
    if (!out.empty()) out += ", ";
    out += FormatCoalition(b, table);
  }
  return out;
}

std::vector<Coalition> ParseCoalitionList(std::string_view text,
                                          const PlayerTable& table) {
  std::vector<Coalition> out;
  std::size_t pos = 0;
  while (true) {
    const auto open = text.find('{', pos);
    if (open == std::string_view::npos) break;
    const auto close = text.find('}', open);
    if (close == std::string_view::npos) {
      throw MalformedInputError("unbalanced '{' in '" + std::string(text) + "'");
    }
    std::vector<std::string> ids;
    std::string_view inner = text.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (start <= inner.size()) {
      const auto comma = inner.find(',', start);
      const auto piece = inner.substr(
          start, comma == std::string_view::npos ? inner.size() - start
                                                 : comma - start);
      const std::string id = Trim(piece);
      if (!id.empty()) ids.push_back(id);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    out.push_back(table.CoalitionOf(ids));
    pos = close + 1;
  }
  return out;
}

EmbeddedCoalition ParseEmbeddedCoalition(std::string_view text,
                                         const PlayerTable& table) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw MalformedInputError("expected 'active | partition' in '" +
                              std::string(text) + "'");
  }
  const auto active = ParseCoalitionList(text.substr(0, bar), table);
  if (active.size() != 1) {
    throw MalformedInputError("expected exactly one active coalition in '" +
                              std::string(text) + "'");
  }
  const auto blocks = ParseCoalitionList(text.substr(bar + 1), table);
  return EmbeddedCoalition::Make(active[0],
                                 Partition::FromBlocks(table.size(), blocks));
}

}  // namespace pfpower
