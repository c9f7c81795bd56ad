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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrep/provenance.hpp"

namespace qrep {

enum class ArtifactKind { source, data, config, results };

const char* artifact_kind_name(ArtifactKind kind);

struct ArtifactDecl {
  std::string id;
  ArtifactKind kind = ArtifactKind::source;
  std::string path;  // relative, no ".." segments, no leading '/'

  bool operator==(const ArtifactDecl&) const = default;
};

enum class StepKind { build, run, analyze, paper };

const char* step_kind_name(StepKind kind);

struct PipelineStep {
  StepKind kind = StepKind::build;
  std::string command;
  std::string description;

  bool operator==(const PipelineStep&) const = default;
};

struct BackendDecl {
  std::string url;   // endpoint base URL
  std::string kind;  // backend kind label, e.g. "simulated", "ibmq", "dwave"

  bool operator==(const BackendDecl&) const = default;
};

/// The researcher-authored `qrep.json`: everything generation needs to know
/// about one experiment. Credentials are declared by NAME only; values reach
/// the pipeline through environment variables at run time and never appear in
/// the manifest or any generated file.
struct ProjectManifest {
  std::string name;  // [A-Za-z0-9_-]+
  std::vector<ArtifactDecl> artifacts;
  std::vector<PipelineStep> pipeline;
  std::vector<BackendDecl> backends;
  std::vector<std::string> credentials;
  HardwareProvenance provenance;
  std::optional<PipelineStep> paper_build;

  bool operator==(const ProjectManifest&) const = default;
};

/// Workspace view handed to validation and generation: manifest-relative
/// path -> file bytes. Keys double as the set of existing paths.
using Workspace = std::map<std::string, std::string>;

/// Parses a `qrep.json` document. Strict: unknown keys are rejected at every
/// level ("$comment" is tolerated anywhere so skeletons can carry notes).
/// Defaults: backends and credentials may be absent (empty), provenance may
/// be absent (empty record), paper_build is optional.
///
/// Throws Error with code MalformedDocument (not JSON / wrong types),
/// MissingField, UnknownField, DuplicateArtifactId, InvalidPath (absolute or
/// ".." artifact path) or InvalidPipeline (kind order violated, or a required
/// kind among {build, run, analyze} missing).
ProjectManifest parse_manifest(std::string_view text);

/// Canonical serialization: two-space-indented JSON, keys sorted, trailing
/// newline. parse(serialize(parse(text))) == parse(text).
std::string serialize_manifest(const ProjectManifest& m);

/// Provenance as it is emitted into packages (`PROVENANCE.json`): the same
/// canonical rendering used inside serialize_manifest.
std::string serialize_provenance(const HardwareProvenance& p);

/// Parses a standalone provenance document (`PROVENANCE.json` or the
/// manifest's `provenance` object). Throws Error{MalformedDocument}.
HardwareProvenance parse_provenance_document(std::string_view text);

enum class ValidationFindingKind { MissingArtifactFile, InlinedCredential };

struct ValidationFinding {
  ValidationFindingKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;

  bool ok() const { return findings.empty(); }
};

/// Pure consistency check of a manifest against the files that actually
/// exist: every declared artifact must be present in the workspace, and
/// neither artifact contents nor manifest command/description strings may
/// carry a value for a declared credential name.
ValidationReport validate_manifest(const ProjectManifest& m,
                                   const Workspace& workspace);

}  // namespace qrep
