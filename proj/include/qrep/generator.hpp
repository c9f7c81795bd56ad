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

#include <optional>
#include <string>

#include "qrep/manifest.hpp"
#include "qrep/package_tree.hpp"
#include "qrep/templates.hpp"

namespace qrep {

enum class RecipeMode { source, binary };

/// Container build recipe in the restricted Dockerfile dialect (FROM, COPY,
/// RUN, ENTRYPOINT). Source mode provisions declared dependencies over the
/// network; binary mode only repackages the pre-built source image and emits
/// no fetching instruction at all. Throws Error{UnsupportedBackendKind} for a
/// backend kind without a known SDK mapping.
std::string generate_recipe(const ProjectManifest& m, RecipeMode mode,
                            const TemplateSet& templates = builtin_templates());

/// POSIX shell dispatcher (`reproduce.sh`). Steps run strictly in manifest
/// order and the script stops at the first failure. Credentials are read
/// from the environment, guarded up front unless QREP_REPLAY=1, in which
/// case unset credentials default to the redaction token so that replayed
/// requests canonicalize to the recorded digests. Paper steps only run under
/// --with-paper.
std::string generate_dispatcher(const ProjectManifest& m,
                                const TemplateSet& templates = builtin_templates());

/// Package README: one section per pipeline step plus the provenance summary
/// and, when backends are declared, offline-replay instructions.
std::string generate_docs(const ProjectManifest& m,
                          const TemplateSet& templates = builtin_templates());

/// Assembles the full reproduction package. Fixed paths: qrep.json,
/// PROVENANCE.json, reproduce.sh (executable), README.md, recipes/{source,
/// binary}.Dockerfile, every declared artifact under artifacts/<path> and,
/// when given, the transcript at results/transcript.jsonl.
///
/// Precondition: validate_manifest(m, workspace) has no findings (throws
/// std::invalid_argument otherwise). Output is a pure function of the
/// inputs; no clock, locale or host state is consulted.
PackageTree generate_package(const ProjectManifest& m, const TemplateSet& templates,
                             const Workspace& workspace,
                             const std::optional<std::string>& transcript_jsonl);

}  // namespace qrep
