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

#include "qrep/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qrep/error.hpp"
#include "qrep/manifest.hpp"
#include "qrep/replay.hpp"
#include "qrep/util.hpp"

namespace qrep {

namespace {

constexpr const char* kTranscriptPath = "results/transcript.jsonl";
constexpr const char* kStepHeading = "### Step ";

std::optional<ProjectManifest> embedded_manifest(const PackageTree& tree) {
  const PackageFile* file = tree.find("qrep.json");
  if (file == nullptr) return std::nullopt;
  try {
    return parse_manifest(file->content);
  } catch (const Error&) {
    return std::nullopt;
  }
}

CriterionResult check_source_present(const PackageTree& tree,
                                     const std::optional<ProjectManifest>& m) {
  CriterionResult r{"C1", CriterionLevel::required, Verdict::fail, ""};
  if (!m) {
    r.message = "no parseable qrep.json to declare source artifacts";
    return r;
  }
  for (const auto& a : m->artifacts) {
    if (a.kind == ArtifactKind::source && tree.contains("artifacts/" + a.path)) {
      r.verdict = Verdict::pass;
      r.message = "source artifact bundled: artifacts/" + a.path;
      return r;
    }
  }
  r.message = "no artifact of kind source present under artifacts/";
  return r;
}

CriterionResult check_results_present(const PackageTree& tree,
                                      const std::optional<ProjectManifest>& m) {
  CriterionResult r{"C2", CriterionLevel::required, Verdict::fail, ""};
  const PackageFile* transcript = tree.find(kTranscriptPath);
  if (transcript == nullptr) {
    r.verdict = Verdict::partial;
    r.message = (m && !m->backends.empty())
                    ? "backends declared but no recorded results at "
                      "results/transcript.jsonl"
                    : "no recorded results at results/transcript.jsonl";
    return r;
  }
  try {
    const auto t = InteractionTranscript::from_jsonl(transcript->content);
    r.verdict = Verdict::pass;
    r.message = std::to_string(t.records().size()) + " recorded interactions";
  } catch (const Error& e) {
    r.message = std::string("transcript does not parse: ") + e.what();
  }
  return r;
}

CriterionResult check_docs_present(const PackageTree& tree,
                                   const std::optional<ProjectManifest>& m) {
  CriterionResult r{"C3", CriterionLevel::required, Verdict::fail, ""};
  const PackageFile* readme = tree.find("README.md");
  if (readme == nullptr) {
    r.message = "README.md missing";
    return r;
  }
  if (!m) {
    r.message = "README.md present but no parseable manifest to check against";
    return r;
  }
  std::size_t sections = 0;
  for (const auto& line : split_lines(readme->content))
    if (line.rfind(kStepHeading, 0) == 0) ++sections;
  if (sections == m->pipeline.size()) {
    r.verdict = Verdict::pass;
    r.message = "one step section per pipeline step (" +
                std::to_string(sections) + ")";
  } else {
    r.message = "README documents " + std::to_string(sections) + " steps, " +
                "pipeline has " + std::to_string(m->pipeline.size());
  }
  return r;
}

CriterionResult check_dispatcher(const PackageTree& tree) {
  CriterionResult r{"C4", CriterionLevel::required, Verdict::fail, ""};
  const PackageFile* script = tree.find("reproduce.sh");
  if (script == nullptr) {
    r.message = "reproduce.sh missing";
    return r;
  }
  if (!script->executable) {
    r.message = "reproduce.sh is not marked executable";
    return r;
  }
  const std::size_t nl = script->content.find('\n');
  const std::string first_line = script->content.substr(
      0, nl == std::string::npos ? script->content.size() : nl);
  if (first_line != "#!/bin/sh") {
    r.message = "first line is \"" + first_line + "\", expected \"#!/bin/sh\"";
    return r;
  }
  r.verdict = Verdict::pass;
  r.message = "executable #!/bin/sh dispatcher present";
  return r;
}

CriterionResult check_provenance(const PackageTree& tree) {
  CriterionResult r{"C5", CriterionLevel::required, Verdict::fail, ""};
  const PackageFile* file = tree.find("PROVENANCE.json");
  if (file == nullptr) {
    r.message = "PROVENANCE.json missing";
    return r;
  }
  HardwareProvenance p;
  try {
    p = parse_provenance_document(file->content);
  } catch (const Error& e) {
    r.message = std::string("PROVENANCE.json does not parse: ") + e.what();
    return r;
  }
  const auto report = validate_provenance(p);
  const auto level = completeness_level(report);
  switch (level) {
    case CompletenessLevel::complete: r.verdict = Verdict::pass; break;
    case CompletenessLevel::partial: r.verdict = Verdict::partial; break;
    case CompletenessLevel::absent: r.verdict = Verdict::fail; break;
  }
  r.message = "provenance completeness " + std::to_string(report.completeness) +
              "/" + std::to_string(ProvenanceReport::kTrackedFields) + " (" +
              completeness_level_name(level) + ")";
  if (!report.findings.empty())
    r.message += ", " + std::to_string(report.findings.size()) +
                 " structural finding(s)";
  return r;
}

CriterionResult check_no_secrets(const PackageTree& tree,
                                 const std::vector<std::string>& names) {
  CriterionResult r{"C6", CriterionLevel::required, Verdict::pass,
                    "no credential values embedded"};
  for (const auto& [path, file] : tree) {
    for (const auto& leak : scan_for_credential_leaks(file.content, names)) {
      r.verdict = Verdict::fail;
      r.message = path + ":" + std::to_string(leak.line) + ": " + leak.reason +
                  " for credential " + leak.credential;
      return r;
    }
  }
  return r;
}

CriterionResult check_paper_build(const std::optional<ProjectManifest>& m) {
  CriterionResult r{"C7", CriterionLevel::recommended, Verdict::fail,
                    "no paper-build step declared"};
  if (!m) return r;
  const bool in_pipeline =
      std::any_of(m->pipeline.begin(), m->pipeline.end(),
                  [](const PipelineStep& s) { return s.kind == StepKind::paper; });
  if (m->paper_build || in_pipeline) {
    r.verdict = Verdict::pass;
    r.message = "paper-build step declared";
  }
  return r;
}

// Dockerfile vocabulary accepted by the recipe scanner.
const std::set<std::string> kInstructions = {
    "FROM", "COPY", "RUN",   "ENTRYPOINT", "ADD",        "ENV",
    "ARG",  "CMD",  "LABEL", "WORKDIR",    "EXPOSE",     "USER",
    "VOLUME", "SHELL", "STOPSIGNAL", "HEALTHCHECK", "ONBUILD", "MAINTAINER"};

struct Instruction {
  std::string keyword;
  std::string args;
  std::string text;  // verbatim, for diagnostics
};

std::vector<Instruction> parse_recipe(std::string_view recipe) {
  // Join continuation lines, drop comments and blanks.
  std::vector<std::string> logical;
  std::string current;
  for (const auto& raw : split_lines(recipe)) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (current.empty() && (trimmed.empty() || trimmed[0] == '#')) continue;
    if (!trimmed.empty() && trimmed.back() == '\\') {
      trimmed.pop_back();
      current += trimmed + " ";
      continue;
    }
    current += trimmed;
    logical.push_back(current);
    current.clear();
  }
  if (!current.empty()) logical.push_back(current);

  std::vector<Instruction> instructions;
  for (const auto& line : logical) {
    std::istringstream in(line);
    std::string keyword;
    in >> keyword;
    std::transform(keyword.begin(), keyword.end(), keyword.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (kInstructions.find(keyword) == kInstructions.end())
      throw Error(ErrorCode::UnparsableRecipe,
                  "not a Dockerfile instruction: " + line);
    std::string args;
    std::getline(in, args);
    args.erase(0, args.find_first_not_of(" \t"));
    instructions.push_back({keyword, args, line});
  }
  if (instructions.empty())
    throw Error(ErrorCode::UnparsableRecipe, "recipe contains no instructions");
  return instructions;
}

// Splits a RUN command into word tokens, treating shell operators as breaks.
std::vector<std::string> shell_tokens(const std::string& command) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : command) {
    if (c == ' ' || c == '\t' || c == ';' || c == '&' || c == '|' ||
        c == '(' || c == ')') {
      if (!current.empty()) tokens.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

std::string basename_of(const std::string& token) {
  std::size_t slash = token.rfind('/');
  return slash == std::string::npos ? token : token.substr(slash + 1);
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::partial: return "partial";
    case Verdict::fail: return "fail";
  }
  return "unknown";
}

bool ComplianceReport::overall_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) {
                       return c.level != CriterionLevel::required ||
                              c.verdict == Verdict::pass;
                     });
}

const CriterionResult& ComplianceReport::at(std::string_view id) const {
  for (const auto& c : criteria)
    if (c.id == id) return c;
  throw std::out_of_range("no such criterion: " + std::string(id));
}

std::string ComplianceReport::render_text() const {
  std::string out;
  for (const auto& c : criteria) {
    std::string level =
        c.level == CriterionLevel::required ? "REQUIRED   " : "RECOMMENDED";
    out += c.id + " " + level + " " + verdict_name(c.verdict) +
           (c.message.empty() ? "" : "  - " + c.message) + "\n";
  }
  out += std::string("overall: ") + (overall_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string ComplianceReport::render_json() const {
  nlohmann::json doc;
  for (const auto& c : criteria) doc[c.id] = verdict_name(c.verdict);
  doc["overall_pass"] = overall_pass();
  return doc.dump(2) + "\n";
}

ComplianceReport verify_gold_standard(
    const PackageTree& tree, const std::vector<std::string>& credential_names) {
  const auto manifest = embedded_manifest(tree);

  // Scan for the caller's names plus whatever the embedded manifest declares.
  std::vector<std::string> names = credential_names;
  if (manifest)
    for (const auto& n : manifest->credentials)
      if (std::find(names.begin(), names.end(), n) == names.end())
        names.push_back(n);

  ComplianceReport report;
  report.criteria.push_back(check_source_present(tree, manifest));
  report.criteria.push_back(check_results_present(tree, manifest));
  report.criteria.push_back(check_docs_present(tree, manifest));
  report.criteria.push_back(check_dispatcher(tree));
  report.criteria.push_back(check_provenance(tree));
  report.criteria.push_back(check_no_secrets(tree, names));
  report.criteria.push_back(check_paper_build(manifest));
  return report;
}

SelfContainmentReport check_binary_self_containment(std::string_view recipe) {
  const auto instructions = parse_recipe(recipe);

  SelfContainmentReport report;
  for (const auto& inst : instructions) {
    if (inst.keyword == "RUN") {
      const auto tokens = shell_tokens(inst.args);
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string cmd = basename_of(tokens[i]);
        const bool fetches_alone = cmd == "curl" || cmd == "wget" ||
                                   cmd == "apt-get" || cmd == "conda" ||
                                   cmd == "npm";
        const bool fetches_pair =
            i + 1 < tokens.size() &&
            ((cmd == "git" && tokens[i + 1] == "clone") ||
             ((cmd == "pip" || cmd == "pip3") && tokens[i + 1] == "install") ||
             (cmd == "apk" && tokens[i + 1] == "add"));
        if (fetches_alone || fetches_pair) {
          report.violations.push_back(inst.text);
          break;
        }
      }
    } else if (inst.keyword == "ADD") {
      for (const auto& token : shell_tokens(inst.args)) {
        if (token.rfind("http://", 0) == 0 || token.rfind("https://", 0) == 0) {
          report.violations.push_back(inst.text);
          break;
        }
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace qrep
