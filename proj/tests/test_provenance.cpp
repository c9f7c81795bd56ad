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

#include <random>

#include "doctest.h"

using namespace qrep;

namespace {

HardwareProvenance full_record() {
  HardwareProvenance p;
  p.machine_id = "TestQPU-5";
  p.input_generation = "random QUBO instances";
  p.qbit_count = 5;
  p.topology = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  p.input_transformations = "minor-embedding preconditioner";
  p.embedding_method = "greedy chain embedding";
  p.postprocessing = "majority vote over chains";
  p.timings.programming_us = 10;
  p.timings.initialisation_us = 20;
  p.timings.readout_us = 30;
  p.runtime_measurement = "wall clock around API calls, queueing included";
  p.heuristics = "chain strength tuned by bisection";
  return p;
}

// Independent re-derivation of the structural findings for one edge list.
std::vector<ProvenanceFindingKind> brute_force_findings(
    const HardwareProvenance& p) {
  std::vector<ProvenanceFindingKind> kinds;
  for (std::size_t i = 0; i < p.topology.size(); ++i) {
    const auto [a, b] = p.topology[i];
    if (a == b) {
      kinds.push_back(ProvenanceFindingKind::SelfLoop);
      continue;
    }
    if (!(0 <= a && a < b && b < p.qbit_count)) {
      kinds.push_back(ProvenanceFindingKind::EdgeOutOfRange);
      continue;
    }
    bool repeated = false;
    for (std::size_t j = 0; j < i; ++j)
      if (p.topology[j] == p.topology[i]) repeated = true;
    if (repeated) kinds.push_back(ProvenanceFindingKind::DuplicateEdge);
  }
  return kinds;
}

}  // namespace

TEST_CASE("edge beyond qbit budget is flagged") {
  HardwareProvenance p;
  p.qbit_count = 5;
  p.topology = {{0, 7}};
  const auto report = validate_provenance(p);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].kind == ProvenanceFindingKind::EdgeOutOfRange);
}

TEST_CASE("self-loops and duplicates are flagged") {
  HardwareProvenance p;
  p.qbit_count = 4;
  p.topology = {{1, 1}, {0, 2}, {0, 2}};
  const auto report = validate_provenance(p);
  REQUIRE(report.findings.size() == 2);
  CHECK(report.findings[0].kind == ProvenanceFindingKind::SelfLoop);
  CHECK(report.findings[1].kind == ProvenanceFindingKind::DuplicateEdge);
}

TEST_CASE("reversed edge violates the ordering invariant") {
  HardwareProvenance p;
  p.qbit_count = 4;
  p.topology = {{2, 1}};
  const auto report = validate_provenance(p);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].kind == ProvenanceFindingKind::EdgeOutOfRange);
}

TEST_CASE("fully populated record scores 9/9 complete") {
  const auto report = validate_provenance(full_record());
  CHECK(report.completeness == 9);
  CHECK(report.findings.empty());
  CHECK(completeness_level(report) == CompletenessLevel::complete);
}

TEST_CASE("empty record scores 0/9 absent") {
  const auto report = validate_provenance(HardwareProvenance{});
  CHECK(report.completeness == 0);
  CHECK(report.findings.empty());
  CHECK(completeness_level(report) == CompletenessLevel::absent);
}

TEST_CASE("partially populated record is partial") {
  HardwareProvenance p;
  p.input_generation = "a";
  p.qbit_count = 3;
  p.topology = {{0, 1}};
  p.heuristics = "none";
  const auto report = validate_provenance(p);
  CHECK(report.completeness == 4);
  CHECK(completeness_level(report) == CompletenessLevel::partial);
}

TEST_CASE("structural findings block completeness") {
  auto p = full_record();
  p.topology.push_back({0, 99});
  const auto report = validate_provenance(p);
  CHECK(report.completeness == 9);
  CHECK(completeness_level(report) == CompletenessLevel::partial);
}

TEST_CASE("machine id does not count toward the score") {
  HardwareProvenance p;
  p.machine_id = "OnlyTheName-1";
  CHECK(validate_provenance(p).completeness == 0);
}

TEST_CASE("populating any empty field never lowers the score") {
  std::mt19937 rng(11);
  const auto base = full_record();
  for (int trial = 0; trial < 200; ++trial) {
    // Start from a random subset of populated fields.
    HardwareProvenance p;
    if (rng() % 2) p.input_generation = base.input_generation;
    if (rng() % 2) p.qbit_count = base.qbit_count;
    if (rng() % 2) p.topology = base.topology;
    if (rng() % 2) p.input_transformations = base.input_transformations;
    if (rng() % 2) p.embedding_method = base.embedding_method;
    if (rng() % 2) p.postprocessing = base.postprocessing;
    if (rng() % 2) p.timings.readout_us = base.timings.readout_us;
    if (rng() % 2) p.runtime_measurement = base.runtime_measurement;
    if (rng() % 2) p.heuristics = base.heuristics;
    const int before = validate_provenance(p).completeness;

    HardwareProvenance q = p;
    switch (rng() % 9) {
      case 0: q.input_generation = base.input_generation; break;
      case 1: q.qbit_count = base.qbit_count; break;
      case 2: q.topology = base.topology; break;
      case 3: q.input_transformations = base.input_transformations; break;
      case 4: q.embedding_method = base.embedding_method; break;
      case 5: q.postprocessing = base.postprocessing; break;
      case 6: q.timings.programming_us = 1; break;
      case 7: q.runtime_measurement = base.runtime_measurement; break;
      case 8: q.heuristics = base.heuristics; break;
    }
    CHECK(validate_provenance(q).completeness >= before);
  }
}

TEST_CASE("topology validation agrees with a brute-force check") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    HardwareProvenance p;
    p.qbit_count = static_cast<std::int64_t>(rng() % 6);
    const int edges = static_cast<int>(rng() % 8);
    for (int e = 0; e < edges; ++e)
      p.topology.emplace_back(static_cast<std::int64_t>(rng() % 7) - 1,
                              static_cast<std::int64_t>(rng() % 7) - 1);

    const auto report = validate_provenance(p);
    const auto expected = brute_force_findings(p);
    REQUIRE(report.findings.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(report.findings[i].kind == expected[i]);
  }
}
