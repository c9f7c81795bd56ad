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

#include "qrep/generator.hpp"

#include <set>
#include <stdexcept>

#include "qrep/error.hpp"
#include "qrep/util.hpp"

namespace qrep {

namespace {

constexpr const char* kBaseImage = "docker.io/library/python:3.11-slim";

// Backend kind -> SDK package provisioned in source-form recipes. The
// simulated backend needs nothing beyond the generic stack.
std::string sdk_package_for(const std::string& kind) {
  if (kind == "simulated") return "";
  if (kind == "ibmq") return "qiskit";
  if (kind == "dwave") return "dwave-ocean-sdk";
  throw Error(ErrorCode::UnsupportedBackendKind, kind);
}

std::string template_for(const TemplateSet& templates, const std::string& name) {
  auto it = templates.find(name);
  if (it == templates.end())
    throw Error(ErrorCode::UnboundPlaceholder, "no template named " + name);
  return it->second;
}

std::string step_banner(const std::string& tag, const PipelineStep& step) {
  std::string label = step.description.empty()
                          ? std::string(step_kind_name(step.kind))
                          : step.description;
  return "echo \"[" + tag + "] " + step_kind_name(step.kind) + ": " + label +
         "\" >&2";
}

}  // namespace

std::string generate_recipe(const ProjectManifest& m, RecipeMode mode,
                            const TemplateSet& templates) {
  // Resolve SDK packages first so unsupported kinds fail in either mode.
  std::set<std::string> packages = {"numpy"};
  for (const auto& backend : m.backends) {
    std::string pkg = sdk_package_for(backend.kind);
    if (!pkg.empty()) packages.insert(pkg);
  }

  if (mode == RecipeMode::binary) {
    return render_template(template_for(templates, "binary.Dockerfile"),
                           {{"name", m.name},
                            {"source_tag", "qrep-" + m.name + ":source"}})
        .text;
  }

  std::string installs;
  for (const auto& pkg : packages) {
    if (!installs.empty()) installs += "\n";
    installs += "RUN pip install --no-cache-dir " + pkg;
  }
  return render_template(template_for(templates, "source.Dockerfile"),
                         {{"name", m.name},
                          {"base_image", kBaseImage},
                          {"dependency_installs", installs}})
      .text;
}

std::string generate_dispatcher(const ProjectManifest& m,
                                const TemplateSet& templates) {
  std::string backend_setup;
  if (!m.backends.empty()) {
    backend_setup =
        "# Reproducers may point QREP_BACKEND_URL elsewhere (e.g. at a replay\n"
        "# service); the recorded experiment used the declared endpoint.\n"
        ": \"${QREP_BACKEND_URL:=" + m.backends.front().url + "}\"\n"
        "export QREP_BACKEND_URL";
  }

  std::string credential_setup;
  for (const auto& name : m.credentials) {
    if (!credential_setup.empty()) credential_setup += "\n";
    credential_setup +=
        "if [ \"${QREP_REPLAY:-0}\" = \"1\" ]; then\n"
        "  : \"${" + name + ":=" + kRedactedToken + "}\"\n"
        "  export " + name + "\n"
        "elif [ -z \"${" + name + ":-}\" ]; then\n"
        "  echo \"reproduce.sh: credential " + name + " is not set\" >&2\n"
        "  exit 3\n"
        "fi";
  }

  std::string steps;
  std::string paper_steps;
  std::size_t total = 0;
  for (const auto& step : m.pipeline)
    if (step.kind != StepKind::paper) ++total;

  std::size_t index = 0;
  for (const auto& step : m.pipeline) {
    if (step.kind == StepKind::paper) {
      if (!paper_steps.empty()) paper_steps += "\n";
      paper_steps += "  " + step_banner("paper", step) + "\n  " + step.command;
      continue;
    }
    ++index;
    if (!steps.empty()) steps += "\n";
    steps += step_banner(std::to_string(index) + "/" + std::to_string(total),
                         step) +
             "\n" + step.command;
  }
  if (m.paper_build) {
    if (!paper_steps.empty()) paper_steps += "\n";
    paper_steps += "  " + step_banner("paper", *m.paper_build) + "\n  " +
                   m.paper_build->command;
  }
  if (!paper_steps.empty()) {
    paper_steps =
        "if [ \"$WITH_PAPER\" = \"1\" ]; then\n" + paper_steps + "\nfi";
  }

  return render_template(template_for(templates, "reproduce.sh"),
                         {{"name", m.name},
                          {"backend_setup", backend_setup},
                          {"credential_setup", credential_setup},
                          {"steps", steps},
                          {"paper_steps", paper_steps}})
      .text;
}

std::string generate_docs(const ProjectManifest& m, const TemplateSet& templates) {
  std::string credentials_note;
  if (!m.credentials.empty()) {
    credentials_note =
        "Live runs read these environment variables, which are never stored in\n"
        "the package:";
    for (const auto& name : m.credentials) credentials_note += " `" + name + "`";
    credentials_note += ". Offline replays need none.\n";
  }

  std::string results_line;
  // The layout line is emitted whenever backends are declared: either the
  // transcript is bundled or its absence is worth calling out.
  if (!m.backends.empty())
    results_line =
        "- `results/transcript.jsonl` - recorded backend interactions, when "
        "present\n";

  std::string step_sections;
  std::size_t n = 0;
  for (const auto& step : m.pipeline) {
    ++n;
    std::string description =
        step.description.empty() ? "(no description provided)" : step.description;
    step_sections += "### Step " + std::to_string(n) + ": " +
                     step_kind_name(step.kind) + "\n\n" + description +
                     "\n\n    " + step.command + "\n\n";
  }
  if (m.paper_build) {
    std::string description = m.paper_build->description.empty()
                                  ? "(no description provided)"
                                  : m.paper_build->description;
    step_sections += "### Paper build (only with `--with-paper`)\n\n" +
                     description + "\n\n    " + m.paper_build->command + "\n\n";
  }

  const auto report = validate_provenance(m.provenance);
  std::string prov;
  prov += "Machine: " +
          (m.provenance.machine_id.empty() ? std::string("(unspecified)")
                                           : m.provenance.machine_id) +
          "\n";
  prov += "Qbits: " + std::to_string(m.provenance.qbit_count) +
          ", topology edges: " + std::to_string(m.provenance.topology.size()) +
          "\n";
  prov += "Completeness: " + std::to_string(report.completeness) + "/" +
          std::to_string(ProvenanceReport::kTrackedFields) + " (" +
          completeness_level_name(completeness_level(report)) + ")\n";
  prov += "Full record: see `PROVENANCE.json`.\n";

  std::string replay_section;
  if (!m.backends.empty()) {
    replay_section =
        "\n## Offline replay\n"
        "\n"
        "Recorded backend interactions are bundled as "
        "`results/transcript.jsonl`,\n"
        "so the pipeline stays reproducible after the original hardware is "
        "gone.\n"
        "To re-run fully offline:\n"
        "\n"
        "    qrep replay . --port 8080\n"
        "\n"
        "or serve the transcript yourself and point the dispatcher at it:\n"
        "\n"
        "    QREP_REPLAY=1 QREP_BACKEND_URL=http://127.0.0.1:8080 "
        "./reproduce.sh\n"
        "\n"
        "Replay returns each recorded response verbatim. A request that was\n"
        "never recorded fails loudly (HTTP 410): the run has diverged from "
        "the\n"
        "recorded experiment.\n";
  }

  return render_template(template_for(templates, "README.md"),
                         {{"name", m.name},
                          {"credentials_note", credentials_note},
                          {"results_line", results_line},
                          {"step_sections", step_sections},
                          {"provenance_summary", prov},
                          {"replay_section", replay_section}})
      .text;
}

PackageTree generate_package(const ProjectManifest& m, const TemplateSet& templates,
                             const Workspace& workspace,
                             const std::optional<std::string>& transcript_jsonl) {
  if (!validate_manifest(m, workspace).ok())
    throw std::invalid_argument(
        "generate_package: manifest failed validation against the workspace");

  PackageTree tree;
  tree.put("qrep.json", serialize_manifest(m));
  tree.put("PROVENANCE.json", serialize_provenance(m.provenance));
  tree.put("reproduce.sh", generate_dispatcher(m, templates), /*executable=*/true);
  tree.put("README.md", generate_docs(m, templates));
  tree.put("recipes/source.Dockerfile",
           generate_recipe(m, RecipeMode::source, templates));
  tree.put("recipes/binary.Dockerfile",
           generate_recipe(m, RecipeMode::binary, templates));
  for (const auto& artifact : m.artifacts)
    tree.put("artifacts/" + artifact.path, workspace.at(artifact.path));
  if (transcript_jsonl)
    tree.put("results/transcript.jsonl", *transcript_jsonl);
  return tree;
}

}  // namespace qrep
