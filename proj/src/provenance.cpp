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

#include "qrep/provenance.hpp"

#include <set>
#include <string>

namespace qrep {

namespace {

std::string edge_str(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

const char* completeness_level_name(CompletenessLevel level) {
  switch (level) {
    case CompletenessLevel::complete: return "complete";
    case CompletenessLevel::partial: return "partial";
    case CompletenessLevel::absent: return "absent";
  }
  return "unknown";
}

ProvenanceReport validate_provenance(const HardwareProvenance& p) {
  ProvenanceReport report;

  int score = 0;
  if (!p.input_generation.empty()) ++score;
  if (p.qbit_count > 0) ++score;
  if (!p.topology.empty()) ++score;
  if (!p.input_transformations.empty()) ++score;
  if (!p.embedding_method.empty()) ++score;
  if (!p.postprocessing.empty()) ++score;
  if (p.timings.any()) ++score;
  if (!p.runtime_measurement.empty()) ++score;
  if (!p.heuristics.empty()) ++score;
  report.completeness = score;

  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& [a, b] : p.topology) {
    if (a == b) {
      report.findings.push_back(
          {ProvenanceFindingKind::SelfLoop, "self-loop " + edge_str(a, b)});
      continue;
    }
    if (a < 0 || b < 0 || a > b || b >= p.qbit_count) {
      report.findings.push_back(
          {ProvenanceFindingKind::EdgeOutOfRange,
           "edge " + edge_str(a, b) + " violates 0 <= i < j < " +
               std::to_string(p.qbit_count)});
      continue;
    }
    if (!seen.insert({a, b}).second)
      report.findings.push_back(
          {ProvenanceFindingKind::DuplicateEdge,
           "duplicate edge " + edge_str(a, b)});
  }
  return report;
}

CompletenessLevel completeness_level(const ProvenanceReport& report) {
  if (report.completeness == ProvenanceReport::kTrackedFields &&
      report.findings.empty())
    return CompletenessLevel::complete;
  if (report.completeness == 0) return CompletenessLevel::absent;
  return CompletenessLevel::partial;
}

}  // namespace qrep
