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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qrep {

enum class SourceAvailability { none, forge, doi_safe };

/// One surveyed publication. has_repro_package implies the artifacts sit at
/// a DOI-safe permanent location.
struct PaperRecord {
  std::string venue;
  int year = 0;
  bool has_experiment = false;
  SourceAvailability source_availability = SourceAvailability::none;
  bool has_repro_package = false;

  bool operator==(const PaperRecord&) const = default;
};

struct VenueRow {
  std::string venue;
  int year = 0;
  int papers = 0;  // publications surveyed
  int exp = 0;     // describing artefacts that should be reproducible
  int src = 0;     // providing source at least on a volatile forge
  int repro = 0;   // providing a DOI-safe reproduction package

  bool operator==(const VenueRow&) const = default;
};

struct AuditSummary {
  int papers = 0;
  int exp = 0;
  int src = 0;
  int repro = 0;

  bool operator==(const AuditSummary&) const = default;
};

/// Loads the survey corpus CSV. Header must be exactly
/// `venue,year,has_experiment,source_availability,has_repro_package`.
/// Throws Error{BadHeader|BadEnumValue|InconsistentRecord|MalformedDocument},
/// citing the offending 1-based file row.
std::vector<PaperRecord> load_corpus(std::string_view csv);

/// One row per (venue, year), sorted by (year, venue). src counts records
/// with availability forge or better.
std::vector<VenueRow> aggregate(const std::vector<PaperRecord>& records);

AuditSummary summarize(const std::vector<VenueRow>& rows);

/// Aligned text table in survey column order plus a Total row.
std::string render_audit_table(const std::vector<VenueRow>& rows,
                               const AuditSummary& summary);

std::string render_audit_json(const std::vector<VenueRow>& rows,
                              const AuditSummary& summary);

}  // namespace qrep
