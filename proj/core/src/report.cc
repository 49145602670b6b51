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

#include "pfpower/report.h"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "pfpower/errors.h"
#include "pfpower/spec_io.h"

namespace pfpower {
namespace {

using Json = nlohmann::ordered_json;

// Display width in code points, which is what aligned output needs for the
// accented player names that occur in practice.
std::size_t DisplayWidth(std::string_view s) {
  std::size_t width = 0;
  for (unsigned char ch : s) {
    if ((ch & 0xC0) != 0x80) ++width;
  }
  return width;
}

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) {
    rows_.push_back(std::move(header));
  }
  void Add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string Render() const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      if (widths.size() < row.size()) widths.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) {
        widths[c] = std::max(widths[c], DisplayWidth(row[c]));
      }
    }
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::string line;
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (c > 0) line += "  ";
        line += rows_[r][c];
        if (c + 1 < rows_[r].size()) {
          line.append(widths[c] - DisplayWidth(rows_[r][c]), ' ');
        }
      }
      out += line + "\n";
      if (r == 0) {
        std::size_t total = 0;
        for (auto w : widths) total += w;
        total += widths.empty() ? 0 : 2 * (widths.size() - 1);
        out += std::string(total, '-') + "\n";
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string CsvRow(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += CsvField(fields[i]);
  }
  return out + "\r\n";
}

Json ExactInteger(const BigInt& value) {
  if (value <= BigInt(INT64_MAX) && value >= BigInt(INT64_MIN)) {
    return Json(value.convert_to<std::int64_t>());
  }
  return Json(value.str());
}

Json ExactRational(const Rational& value) {
  Json out;
  out["num"] = ExactInteger(boost::multiprecision::numerator(value));
  out["den"] = ExactInteger(boost::multiprecision::denominator(value));
  out["rounded"] = RoundDecimal(value);
  return out;
}

Json Ids(Coalition c, const PlayerTable& table) {
  Json out = Json::array();
  for (const auto& id : table.IdsOf(c)) out.push_back(id);
  return out;
}

Json PartitionJson(const Partition& p, const PlayerTable& table) {
  Json out = Json::array();
  for (Coalition b : p.blocks()) out.push_back(Ids(b, table));
  return out;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string JoinSeats(const std::vector<std::int64_t>& seats) {
  std::string out;
  for (std::size_t i = 0; i < seats.size(); ++i) {
    if (i > 0) out += " / ";
    out += std::to_string(seats[i]);
  }
  return out;
}

std::string JoinCoalitions(const std::vector<Coalition>& cs,
                           const PlayerTable& table) {
  if (cs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) out += ", ";
    out += FormatCoalition(cs[i], table);
  }
  return out;
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::toupper(ch));
  return out;
}

std::string SignedDecimal(const Rational& value) {
  const std::string rounded = RoundDecimal(value);
  return rounded.front() == '-' ? rounded : "+" + rounded;
}

}  // namespace

OutputFormat ParseOutputFormat(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ValidationError("format", "unknown format '" + std::string(text) +
                                      "' (expected table, csv or json)");
}

std::string RenderMwec(const GameSpec& spec, const MwcSet& set,
                       OutputFormat format) {
  const PlayerTable& table = spec.table();
  const bool embedded = set.form() == GameForm::kPartition;
  switch (format) {
    case OutputFormat::kTable: {
      TextTable t(embedded
                      ? std::vector<std::string>{"#", "Active coalition",
                                                 "Partition"}
                      : std::vector<std::string>{"#", "Coalition"});
      for (std::size_t k = 0; k < set.size(); ++k) {
        std::vector<std::string> row{std::to_string(k + 1),
                                     FormatCoalition(set.active(k), table)};
        if (embedded) {
          row.push_back(FormatPartition(set.embedded()[k].partition, table));
        }
        t.Add(std::move(row));
      }
      return t.Render() + std::to_string(set.size()) +
             (embedded ? " minimal winning embedded coalitions\n"
                       : " minimal winning coalitions\n");
    }
    case OutputFormat::kCsv: {
      std::string out = CsvRow(embedded ? std::vector<std::string>{
                                              "index", "active", "partition"}
                                        : std::vector<std::string>{
                                              "index", "coalition"});
      for (std::size_t k = 0; k < set.size(); ++k) {
        std::vector<std::string> row{std::to_string(k + 1),
                                     FormatCoalition(set.active(k), table)};
        if (embedded) {
          row.push_back(FormatPartition(set.embedded()[k].partition, table));
        }
        out += CsvRow(row);
      }
      return out;
    }
    case OutputFormat::kJson: {
      Json doc;
      doc["form"] = std::string(ToString(set.form()));
      doc["count"] = set.size();
      Json elements = Json::array();
      for (std::size_t k = 0; k < set.size(); ++k) {
        Json e;
        e["active"] = Ids(set.active(k), table);
        if (embedded) {
          e["partition"] = PartitionJson(set.embedded()[k].partition, table);
        }
        elements.push_back(std::move(e));
      }
      doc["elements"] = std::move(elements);
      return Dump(doc);
    }
  }
  return {};
}

std::string RenderTies(const GameSpec& spec,
                       const std::vector<TiedPartition>& ties,
                       OutputFormat format) {
  const PlayerTable& table = spec.table();
  switch (format) {
    case OutputFormat::kTable: {
      TextTable t({"Partition", "Seats", "Winner"});
      for (const auto& tie : ties) {
        t.Add({FormatPartition(tie.partition, table), JoinSeats(tie.seats),
               JoinCoalitions(tie.winners, table)});
      }
      return t.Render() + std::to_string(ties.size()) +
             " tied partitions (tie rule: " +
             std::string(ToString(spec.tie_rule())) + ")\n";
    }
    case OutputFormat::kCsv: {
      std::string out =
          CsvRow({"index", "partition", "seats", "tied", "winners"});
      for (std::size_t k = 0; k < ties.size(); ++k) {
        const auto& tie = ties[k];
        out += CsvRow({std::to_string(k + 1),
                       FormatPartition(tie.partition, table),
                       JoinSeats(tie.seats), JoinCoalitions(tie.tied, table),
                       JoinCoalitions(tie.winners, table)});
      }
      return out;
    }
    case OutputFormat::kJson: {
      Json doc;
      doc["tie_rule"] = std::string(ToString(spec.tie_rule()));
      doc["count"] = ties.size();
      Json list = Json::array();
      for (const auto& tie : ties) {
        Json e;
        e["partition"] = PartitionJson(tie.partition, table);
        e["seats"] = tie.seats;
        e["top_weight"] = tie.top_weight;
        Json tied = Json::array();
        for (Coalition c : tie.tied) tied.push_back(Ids(c, table));
        e["tied"] = std::move(tied);
        Json winners = Json::array();
        for (Coalition c : tie.winners) winners.push_back(Ids(c, table));
        e["winners"] = std::move(winners);
        list.push_back(std::move(e));
      }
      doc["partitions"] = std::move(list);
      return Dump(doc);
    }
  }
  return {};
}

std::string RenderIndices(const GameSpec& spec,
                          const std::vector<IndexVector>& indices,
                          OutputFormat format) {
  const PlayerTable& table = spec.table();
  switch (format) {
    case OutputFormat::kTable: {
      std::vector<std::string> header{"Index"};
      for (const auto& p : table.players()) header.push_back(p.id);
      TextTable t(std::move(header));
      for (const auto& index : indices) {
        std::vector<std::string> row{Upper(ToString(index.kind))};
        for (const auto& v : index.values) row.push_back(RoundDecimal(v));
        t.Add(std::move(row));
      }
      return t.Render();
    }
    case OutputFormat::kCsv: {
      std::string out = CsvRow({"index", "player", "rounded", "num", "den"});
      for (const auto& index : indices) {
        for (int i = 0; i < table.size(); ++i) {
          const Rational& v = index.values[i];
          out += CsvRow({std::string(ToString(index.kind)), table.id(i),
                         RoundDecimal(v),
                         boost::multiprecision::numerator(v).str(),
                         boost::multiprecision::denominator(v).str()});
        }
      }
      return out;
    }
    case OutputFormat::kJson: {
      Json doc;
      doc["form"] = std::string(ToString(spec.form()));
      Json players = Json::array();
      for (const auto& p : table.players()) players.push_back(p.id);
      doc["players"] = std::move(players);
      Json list = Json::array();
      for (const auto& index : indices) {
        Json e;
        e["index"] = std::string(ToString(index.kind));
        Json values = Json::array();
        for (int i = 0; i < table.size(); ++i) {
          Json v = ExactRational(index.values[i]);
          Json entry;
          entry["player"] = table.id(i);
          for (auto& [key, value] : v.items()) entry[key] = value;
          values.push_back(std::move(entry));
        }
        e["values"] = std::move(values);
        list.push_back(std::move(e));
      }
      doc["indices"] = std::move(list);
      return Dump(doc);
    }
  }
  return {};
}

std::string RenderComparison(const std::vector<ComparisonColumn>& columns,
                             OutputFormat format) {
  std::vector<std::string> players;
  for (const auto& col : columns) {
    for (const auto& p : col.table.players()) {
      if (std::find(players.begin(), players.end(), p.id) == players.end()) {
        players.push_back(p.id);
      }
    }
  }
  std::vector<IndexKind> kinds;
  for (const auto& col : columns) {
    for (const auto& index : col.indices) {
      if (std::find(kinds.begin(), kinds.end(), index.kind) == kinds.end()) {
        kinds.push_back(index.kind);
      }
    }
  }
  auto lookup = [&](std::size_t c, const std::string& player,
                    IndexKind kind) -> std::optional<Rational> {
    const auto& col = columns[c];
    int idx = -1;
    for (int i = 0; i < col.table.size(); ++i) {
      if (col.table.id(i) == player) idx = i;
    }
    if (idx < 0) return std::nullopt;
    for (const auto& index : col.indices) {
      if (index.kind == kind) return index.values[idx];
    }
    return std::nullopt;
  };

  switch (format) {
    case OutputFormat::kTable: {
      std::vector<std::string> header{"Player", "Index"};
      for (const auto& col : columns) header.push_back(col.title);
      TextTable t(std::move(header));
      for (const auto& player : players) {
        for (IndexKind kind : kinds) {
          std::vector<std::string> row{player, Upper(ToString(kind))};
          std::optional<Rational> previous;
          for (std::size_t c = 0; c < columns.size(); ++c) {
            const auto value = lookup(c, player, kind);
            if (!value) {
              row.push_back("-");
            } else if (previous) {
              row.push_back(RoundDecimal(*value) + " (" +
                            SignedDecimal(*value - *previous) + ")");
            } else {
              row.push_back(RoundDecimal(*value));
            }
            previous = value;
          }
          t.Add(std::move(row));
        }
      }
      return t.Render();
    }
    case OutputFormat::kCsv: {
      std::string out = CsvRow(
          {"player", "index", "period", "rounded", "num", "den", "delta"});
      for (const auto& player : players) {
        for (IndexKind kind : kinds) {
          std::optional<Rational> previous;
          for (std::size_t c = 0; c < columns.size(); ++c) {
            const auto value = lookup(c, player, kind);
            if (!value) {
              out += CsvRow({player, std::string(ToString(kind)),
                             columns[c].label, "", "", "", ""});
            } else {
              out += CsvRow(
                  {player, std::string(ToString(kind)), columns[c].label,
                   RoundDecimal(*value),
                   boost::multiprecision::numerator(*value).str(),
                   boost::multiprecision::denominator(*value).str(),
                   previous ? SignedDecimal(*value - *previous) : ""});
            }
            previous = value;
          }
        }
      }
      return out;
    }
    case OutputFormat::kJson: {
      Json doc;
      Json periods = Json::array();
      for (const auto& col : columns) {
        Json p;
        p["label"] = col.label;
        p["title"] = col.title;
        periods.push_back(std::move(p));
      }
      doc["periods"] = std::move(periods);
      Json rows = Json::array();
      for (const auto& player : players) {
        for (IndexKind kind : kinds) {
          Json row;
          row["player"] = player;
          row["index"] = std::string(ToString(kind));
          Json values = Json::array();
          std::optional<Rational> previous;
          for (std::size_t c = 0; c < columns.size(); ++c) {
            const auto value = lookup(c, player, kind);
            if (!value) {
              values.push_back(nullptr);
            } else {
              Json v = ExactRational(*value);
              v["delta"] = previous ? Json(SignedDecimal(*value - *previous))
                                    : Json(nullptr);
              values.push_back(std::move(v));
            }
            previous = value;
          }
          row["values"] = std::move(values);
          rows.push_back(std::move(row));
        }
      }
      doc["rows"] = std::move(rows);
      return Dump(doc);
    }
  }
  return {};
}

std::string RenderValidation(const GameSpec& spec, OutputFormat format) {
  const PlayerTable& table = spec.table();
  switch (format) {
    case OutputFormat::kJson:
      return SerializeSpec(spec);
    case OutputFormat::kCsv: {
      std::string out = CsvRow({"id", "weight", "votes"});
      for (const auto& p : table.players()) {
        out += CsvRow({p.id, std::to_string(p.weight),
                       p.votes ? std::to_string(*p.votes) : ""});
      }
      return out;
    }
    case OutputFormat::kTable: {
      std::ostringstream out;
      out << "valid " << ToString(spec.form()) << "-form game: "
          << table.size() << " players, total weight " << table.total_weight();
      if (spec.form() == GameForm::kCharacteristic) {
        out << ", quota " << spec.quota();
      } else {
        out << ", tie rule " << ToString(spec.tie_rule());
      }
      out << "\n";
      return out.str();
    }
  }
  return {};
}

}  // namespace pfpower
