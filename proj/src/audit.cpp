/* Copyright 2026 The qrep Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qrep/audit.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "qrep/error.hpp"
#include "qrep/util.hpp"

namespace qrep {

namespace {

constexpr const char* kHeader =
    "venue,year,has_experiment,source_availability,has_repro_package";

// Minimal CSV field split with double-quote support ("" escapes a quote).
std::vector<std::string> csv_fields(const std::string& line, std::size_t row) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"' && current.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted)
    throw Error(ErrorCode::MalformedDocument,
                "row " + std::to_string(row) + ": unterminated quote");
  fields.push_back(current);
  return fields;
}

bool parse_bool(const std::string& value, std::size_t row) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw Error(ErrorCode::BadEnumValue,
              "row " + std::to_string(row) + ": expected true/false, got \"" +
                  value + "\"");
}

SourceAvailability parse_availability(const std::string& value, std::size_t row) {
  if (value == "none") return SourceAvailability::none;
  if (value == "forge") return SourceAvailability::forge;
  if (value == "doi_safe") return SourceAvailability::doi_safe;
  throw Error(ErrorCode::BadEnumValue,
              "row " + std::to_string(row) +
                  ": expected none/forge/doi_safe, got \"" + value + "\"");
}

}  // namespace

std::vector<PaperRecord> load_corpus(std::string_view csv) {
  auto lines = split_lines(csv);
  for (auto& line : lines)
    if (!line.empty() && line.back() == '\r') line.pop_back();

  if (lines.empty() || lines[0] != kHeader)
    throw Error(ErrorCode::BadHeader,
                std::string("expected header \"") + kHeader + "\"");

  std::vector<PaperRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t row = i + 1;  // 1-based file row, header is row 1
    if (lines[i].empty()) continue;
    const auto fields = csv_fields(lines[i], row);
    if (fields.size() != 5)
      throw Error(ErrorCode::MalformedDocument,
                  "row " + std::to_string(row) + ": expected 5 fields, got " +
                      std::to_string(fields.size()));

    PaperRecord rec;
    rec.venue = fields[0];
    if (rec.venue.empty())
      throw Error(ErrorCode::MalformedDocument,
                  "row " + std::to_string(row) + ": empty venue");
    try {
      std::size_t used = 0;
      rec.year = std::stoi(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument(fields[1]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedDocument,
                  "row " + std::to_string(row) + ": bad year \"" + fields[1] +
                      "\"");
    }
    rec.has_experiment = parse_bool(fields[2], row);
    rec.source_availability = parse_availability(fields[3], row);
    rec.has_repro_package = parse_bool(fields[4], row);

    if (rec.has_repro_package &&
        rec.source_availability != SourceAvailability::doi_safe)
      throw Error(ErrorCode::InconsistentRecord,
                  "row " + std::to_string(row) +
                      ": has_repro_package requires source_availability "
                      "doi_safe");
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<VenueRow> aggregate(const std::vector<PaperRecord>& records) {
  std::map<std::pair<int, std::string>, VenueRow> rows;
  for (const auto& rec : records) {
    VenueRow& row = rows[{rec.year, rec.venue}];
    row.venue = rec.venue;
    row.year = rec.year;
    row.papers += 1;
    if (rec.has_experiment) row.exp += 1;
    if (rec.source_availability != SourceAvailability::none) row.src += 1;
    if (rec.has_repro_package) row.repro += 1;
  }

  std::vector<VenueRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

AuditSummary summarize(const std::vector<VenueRow>& rows) {
  AuditSummary summary;
  for (const auto& row : rows) {
    summary.papers += row.papers;
    summary.exp += row.exp;
    summary.src += row.src;
    summary.repro += row.repro;
  }
  return summary;
}

std::string render_audit_table(const std::vector<VenueRow>& rows,
                               const AuditSummary& summary) {
  std::size_t venue_width = 5;  // "Venue"
  for (const auto& row : rows) venue_width = std::max(venue_width, row.venue.size());

  auto pad_right = [](const std::string& s, std::size_t width) {
    return s + std::string(width - s.size(), ' ');
  };
  auto pad_left = [](const std::string& s, std::size_t width) {
    return std::string(width - std::min(width, s.size()), ' ') + s;
  };

  std::string out;
  out += pad_right("Venue", venue_width) + "  Year  # Papers  # Exp  # Src  # Repro\n";
  for (const auto& row : rows) {
    out += pad_right(row.venue, venue_width) + "  " +
           pad_left(std::to_string(row.year), 4) + "  " +
           pad_left(std::to_string(row.papers), 8) + "  " +
           pad_left(std::to_string(row.exp), 5) + "  " +
           pad_left(std::to_string(row.src), 5) + "  " +
           pad_left(std::to_string(row.repro), 7) + "\n";
  }
  out += pad_right("Total", venue_width) + "  " + pad_left("", 4) + "  " +
         pad_left(std::to_string(summary.papers), 8) + "  " +
         pad_left(std::to_string(summary.exp), 5) + "  " +
         pad_left(std::to_string(summary.src), 5) + "  " +
         pad_left(std::to_string(summary.repro), 7) + "\n";
  return out;
}

std::string render_audit_json(const std::vector<VenueRow>& rows,
                              const AuditSummary& summary) {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& row : rows)
    rows_json.push_back({{"venue", row.venue},
                         {"year", row.year},
                         {"papers", row.papers},
                         {"exp", row.exp},
                         {"src", row.src},
                         {"repro", row.repro}});
  nlohmann::json doc{{"rows", rows_json},
                     {"summary",
                      {{"papers", summary.papers},
                       {"exp", summary.exp},
                       {"src", summary.src},
                       {"repro", summary.repro}}}};
  return doc.dump(2) + "\n";
}

}  // namespace qrep
