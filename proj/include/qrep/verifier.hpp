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

#include "qrep/package_tree.hpp"

namespace qrep {

enum class Verdict { pass, partial, fail };
enum class CriterionLevel { required, recommended };

const char* verdict_name(Verdict v);

struct CriterionResult {
  std::string id;  // "C1".."C7"
  CriterionLevel level = CriterionLevel::required;
  Verdict verdict = Verdict::fail;
  std::string message;
};

/// Exactly one entry per criterion, ordered C1..C7.
struct ComplianceReport {
  std::vector<CriterionResult> criteria;

  bool overall_pass() const;           // all REQUIRED criteria pass
  const CriterionResult& at(std::string_view id) const;
  std::string render_text() const;     // human-readable, one line per criterion
  std::string render_json() const;     // criterion id -> verdict document
};

/// Checks a package tree against the gold-standard criteria:
///   C1 REQUIRED     a source artifact is bundled under artifacts/
///   C2 REQUIRED     recorded results exist and parse (partial when absent)
///   C3 REQUIRED     README documents every pipeline step
///   C4 REQUIRED     executable #!/bin/sh dispatcher at reproduce.sh
///   C5 REQUIRED     PROVENANCE.json parses; verdict mirrors completeness
///   C6 REQUIRED     no credential value embedded anywhere in the tree
///   C7 RECOMMENDED  a paper-build step is declared
/// Never throws: problems become criterion verdicts.
ComplianceReport verify_gold_standard(const PackageTree& tree,
                                      const std::vector<std::string>& credential_names);

struct SelfContainmentReport {
  bool pass = false;
  std::vector<std::string> violations;  // offending instructions, verbatim
};

/// Textual self-containment check for binary-form recipes: fails on any RUN
/// invoking a network-fetching command (curl, wget, git clone, pip install,
/// apt-get, apk add, conda, npm) or ADD with a URL source. Throws
/// Error{UnparsableRecipe} when the text is not a plausible Dockerfile.
SelfContainmentReport check_binary_self_containment(std::string_view recipe);

}  // namespace qrep
