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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qrep {

/// Programming, initialisation and readout durations in microseconds.
/// All three are optional; hardware vendors rarely expose every one.
struct TimingRecord {
  std::optional<std::uint64_t> programming_us;
  std::optional<std::uint64_t> initialisation_us;
  std::optional<std::uint64_t> readout_us;

  bool any() const {
    return programming_us || initialisation_us || readout_us;
  }
  bool operator==(const TimingRecord&) const = default;
};

/// Hardware metadata a reproduction package must carry so that a result can
/// be interpreted after the machine itself is gone: how inputs were produced,
/// the qbit budget and coupling topology, the logical-to-physical embedding,
/// postprocessing, timing figures, how runtimes were measured (including
/// scheduler interference) and any manual tuning policies.
struct HardwareProvenance {
  std::string machine_id;  // unique model/type specification
  std::string input_generation;
  std::int64_t qbit_count = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> topology;  // undirected edges
  std::string input_transformations;
  std::string embedding_method;
  std::string postprocessing;
  TimingRecord timings;
  std::string runtime_measurement;
  std::string heuristics;

  bool operator==(const HardwareProvenance&) const = default;
};

enum class ProvenanceFindingKind { EdgeOutOfRange, SelfLoop, DuplicateEdge };

struct ProvenanceFinding {
  ProvenanceFindingKind kind;
  std::string message;
};

/// Nine fields are tracked for completeness: the seven lettered metadata
/// items plus runtime_measurement and heuristics. machine_id is mandatory
/// context, not a scored field.
struct ProvenanceReport {
  static constexpr int kTrackedFields = 9;

  int completeness = 0;
  std::vector<ProvenanceFinding> findings;
};

enum class CompletenessLevel { complete, partial, absent };

const char* completeness_level_name(CompletenessLevel level);

/// Scores completeness and checks the topology structurally: every edge
/// (i, j) must satisfy 0 <= i < j < qbit_count, with no self-loops and no
/// repeated edges. A reversed pair already violates the ordering rule and is
/// reported as EdgeOutOfRange.
ProvenanceReport validate_provenance(const HardwareProvenance& p);

/// complete <=> 9/9 and structurally clean; absent <=> 0/9; otherwise partial.
CompletenessLevel completeness_level(const ProvenanceReport& report);

}  // namespace qrep
