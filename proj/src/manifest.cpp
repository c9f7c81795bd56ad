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

#include "qrep/manifest.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "qrep/error.hpp"
#include "qrep/util.hpp"

namespace qrep {

namespace {

using nlohmann::json;

// "$comment" is legal anywhere so that init skeletons can carry notes.
void check_keys(const json& obj, const std::string& context,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (key == "$comment") continue;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
          return key == a;
        }) == allowed.end())
      throw Error(ErrorCode::UnknownField,
                  "unexpected key \"" + key + "\" in " + context);
  }
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::MissingField, key);
  return *it;
}

std::string get_string(const json& value, const std::string& context) {
  if (!value.is_string())
    throw Error(ErrorCode::MalformedDocument, context + " must be a string");
  return value.get<std::string>();
}

std::int64_t get_integer(const json& value, const std::string& context) {
  if (!value.is_number_integer())
    throw Error(ErrorCode::MalformedDocument, context + " must be an integer");
  return value.get<std::int64_t>();
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

ArtifactKind parse_artifact_kind(const std::string& s) {
  if (s == "source") return ArtifactKind::source;
  if (s == "data") return ArtifactKind::data;
  if (s == "config") return ArtifactKind::config;
  if (s == "results") return ArtifactKind::results;
  throw Error(ErrorCode::MalformedDocument, "unknown artifact kind \"" + s + "\"");
}

StepKind parse_step_kind(const std::string& s) {
  if (s == "build") return StepKind::build;
  if (s == "run") return StepKind::run;
  if (s == "analyze") return StepKind::analyze;
  if (s == "paper") return StepKind::paper;
  throw Error(ErrorCode::MalformedDocument, "unknown step kind \"" + s + "\"");
}

PipelineStep parse_step(const json& obj, const std::string& context) {
  if (!obj.is_object())
    throw Error(ErrorCode::MalformedDocument, context + " must be an object");
  check_keys(obj, context, {"kind", "command", "description"});
  PipelineStep step;
  step.kind = parse_step_kind(get_string(require(obj, "kind"), context + ".kind"));
  step.command = get_string(require(obj, "command"), context + ".command");
  if (step.command.empty())
    throw Error(ErrorCode::MalformedDocument, context + ".command must be non-empty");
  if (obj.contains("description"))
    step.description = get_string(obj["description"], context + ".description");
  return step;
}

std::optional<std::uint64_t> parse_timing(const json& obj, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  std::int64_t v = get_integer(obj[key], std::string("timings.") + key);
  if (v < 0)
    throw Error(ErrorCode::MalformedDocument,
                std::string("timings.") + key + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

HardwareProvenance parse_provenance(const json& obj) {
  if (!obj.is_object())
    throw Error(ErrorCode::MalformedDocument, "provenance must be an object");
  check_keys(obj, "provenance",
             {"machine_id", "input_generation", "qbit_count", "topology",
              "input_transformations", "embedding_method", "postprocessing",
              "timings", "runtime_measurement", "heuristics"});
  HardwareProvenance p;
  if (obj.contains("machine_id"))
    p.machine_id = get_string(obj["machine_id"], "provenance.machine_id");
  if (obj.contains("input_generation"))
    p.input_generation =
        get_string(obj["input_generation"], "provenance.input_generation");
  if (obj.contains("qbit_count")) {
    p.qbit_count = get_integer(obj["qbit_count"], "provenance.qbit_count");
    if (p.qbit_count < 0)
      throw Error(ErrorCode::MalformedDocument, "qbit_count must be non-negative");
  }
  if (obj.contains("topology")) {
    const json& topo = obj["topology"];
    if (!topo.is_array())
      throw Error(ErrorCode::MalformedDocument, "topology must be an array");
    for (const json& edge : topo) {
      if (!edge.is_array() || edge.size() != 2)
        throw Error(ErrorCode::MalformedDocument,
                    "topology edges must be [i, j] pairs");
      p.topology.emplace_back(get_integer(edge[0], "topology edge"),
                              get_integer(edge[1], "topology edge"));
    }
  }
  if (obj.contains("input_transformations"))
    p.input_transformations = get_string(obj["input_transformations"],
                                         "provenance.input_transformations");
  if (obj.contains("embedding_method"))
    p.embedding_method =
        get_string(obj["embedding_method"], "provenance.embedding_method");
  if (obj.contains("postprocessing"))
    p.postprocessing =
        get_string(obj["postprocessing"], "provenance.postprocessing");
  if (obj.contains("timings")) {
    const json& t = obj["timings"];
    if (!t.is_object())
      throw Error(ErrorCode::MalformedDocument, "timings must be an object");
    check_keys(t, "timings", {"programming_us", "initialisation_us", "readout_us"});
    p.timings.programming_us = parse_timing(t, "programming_us");
    p.timings.initialisation_us = parse_timing(t, "initialisation_us");
    p.timings.readout_us = parse_timing(t, "readout_us");
  }
  if (obj.contains("runtime_measurement"))
    p.runtime_measurement =
        get_string(obj["runtime_measurement"], "provenance.runtime_measurement");
  if (obj.contains("heuristics"))
    p.heuristics = get_string(obj["heuristics"], "provenance.heuristics");
  return p;
}

json provenance_to_json(const HardwareProvenance& p) {
  json topo = json::array();
  for (const auto& [a, b] : p.topology) topo.push_back(json::array({a, b}));
  json timings = json::object();
  if (p.timings.programming_us) timings["programming_us"] = *p.timings.programming_us;
  if (p.timings.initialisation_us)
    timings["initialisation_us"] = *p.timings.initialisation_us;
  if (p.timings.readout_us) timings["readout_us"] = *p.timings.readout_us;
  return json{{"machine_id", p.machine_id},
              {"input_generation", p.input_generation},
              {"qbit_count", p.qbit_count},
              {"topology", topo},
              {"input_transformations", p.input_transformations},
              {"embedding_method", p.embedding_method},
              {"postprocessing", p.postprocessing},
              {"timings", timings},
              {"runtime_measurement", p.runtime_measurement},
              {"heuristics", p.heuristics}};
}

json step_to_json(const PipelineStep& step) {
  return json{{"kind", step_kind_name(step.kind)},
              {"command", step.command},
              {"description", step.description}};
}

int step_rank(StepKind kind) {
  switch (kind) {
    case StepKind::build: return 0;
    case StepKind::run: return 1;
    case StepKind::analyze: return 2;
    case StepKind::paper: return 3;
  }
  return 4;
}

}  // namespace

const char* artifact_kind_name(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::source: return "source";
    case ArtifactKind::data: return "data";
    case ArtifactKind::config: return "config";
    case ArtifactKind::results: return "results";
  }
  return "unknown";
}

const char* step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::build: return "build";
    case StepKind::run: return "run";
    case StepKind::analyze: return "analyze";
    case StepKind::paper: return "paper";
  }
  return "unknown";
}

ProjectManifest parse_manifest(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorCode::MalformedDocument, "top level must be a JSON object");
  check_keys(doc, "manifest",
             {"name", "artifacts", "pipeline", "backends", "credentials",
              "provenance", "paper_build"});

  ProjectManifest m;

  m.name = get_string(require(doc, "name"), "name");
  if (!is_identifier(m.name))
    throw Error(ErrorCode::MalformedDocument,
                "name must match [A-Za-z0-9_-]+, got \"" + m.name + "\"");

  const json& artifacts = require(doc, "artifacts");
  if (!artifacts.is_array())
    throw Error(ErrorCode::MalformedDocument, "artifacts must be an array");
  std::set<std::string> ids;
  for (const json& a : artifacts) {
    if (!a.is_object())
      throw Error(ErrorCode::MalformedDocument, "artifact must be an object");
    check_keys(a, "artifact", {"id", "kind", "path"});
    ArtifactDecl decl;
    decl.id = get_string(require(a, "id"), "artifact.id");
    if (!is_identifier(decl.id))
      throw Error(ErrorCode::MalformedDocument,
                  "artifact id must match [A-Za-z0-9_-]+, got \"" + decl.id + "\"");
    decl.kind = parse_artifact_kind(get_string(require(a, "kind"), "artifact.kind"));
    decl.path = get_string(require(a, "path"), "artifact.path");
    if (!is_safe_relative_path(decl.path))
      throw Error(ErrorCode::InvalidPath,
                  "artifact \"" + decl.id + "\" path \"" + decl.path +
                      "\" must be relative with no \"..\" segments");
    if (!ids.insert(decl.id).second)
      throw Error(ErrorCode::DuplicateArtifactId, decl.id);
    m.artifacts.push_back(std::move(decl));
  }

  const json& pipeline = require(doc, "pipeline");
  if (!pipeline.is_array())
    throw Error(ErrorCode::MalformedDocument, "pipeline must be an array");
  for (const json& s : pipeline)
    m.pipeline.push_back(parse_step(s, "pipeline step"));
  if (m.pipeline.empty())
    throw Error(ErrorCode::InvalidPipeline, "pipeline must not be empty");
  int prev_rank = -1;
  bool seen[4] = {false, false, false, false};
  for (const auto& step : m.pipeline) {
    int rank = step_rank(step.kind);
    if (rank < prev_rank)
      throw Error(ErrorCode::InvalidPipeline,
                  "steps must be ordered build < run < analyze < paper");
    prev_rank = rank;
    seen[rank] = true;
  }
  for (StepKind required : {StepKind::build, StepKind::run, StepKind::analyze})
    if (!seen[step_rank(required)])
      throw Error(ErrorCode::InvalidPipeline,
                  std::string("pipeline lacks a ") + step_kind_name(required) +
                      " step");

  if (doc.contains("backends")) {
    const json& backends = doc["backends"];
    if (!backends.is_array())
      throw Error(ErrorCode::MalformedDocument, "backends must be an array");
    for (const json& b : backends) {
      if (!b.is_object())
        throw Error(ErrorCode::MalformedDocument, "backend must be an object");
      check_keys(b, "backend", {"url", "kind"});
      BackendDecl decl;
      decl.url = get_string(require(b, "url"), "backend.url");
      decl.kind = get_string(require(b, "kind"), "backend.kind");
      if (decl.url.empty())
        throw Error(ErrorCode::MalformedDocument, "backend.url must be non-empty");
      m.backends.push_back(std::move(decl));
    }
  }

  if (doc.contains("credentials")) {
    const json& creds = doc["credentials"];
    if (!creds.is_array())
      throw Error(ErrorCode::MalformedDocument, "credentials must be an array");
    for (const json& c : creds) {
      std::string name = get_string(c, "credential name");
      // Environment-variable safe: [A-Za-z_][A-Za-z0-9_]*
      bool ok = !name.empty() && !(name[0] >= '0' && name[0] <= '9') &&
                is_identifier(name) && name.find('-') == std::string::npos;
      if (!ok)
        throw Error(ErrorCode::MalformedDocument,
                    "credential names must be environment-variable safe, got \"" +
                        name + "\"");
      m.credentials.push_back(std::move(name));
    }
  }

  if (doc.contains("provenance")) m.provenance = parse_provenance(doc["provenance"]);

  if (doc.contains("paper_build")) {
    m.paper_build = parse_step(doc["paper_build"], "paper_build");
    if (m.paper_build->kind != StepKind::paper)
      throw Error(ErrorCode::MalformedDocument, "paper_build.kind must be \"paper\"");
  }

  return m;
}

std::string serialize_manifest(const ProjectManifest& m) {
  json artifacts = json::array();
  for (const auto& a : m.artifacts)
    artifacts.push_back(json{{"id", a.id},
                             {"kind", artifact_kind_name(a.kind)},
                             {"path", a.path}});
  json pipeline = json::array();
  for (const auto& s : m.pipeline) pipeline.push_back(step_to_json(s));
  json backends = json::array();
  for (const auto& b : m.backends)
    backends.push_back(json{{"url", b.url}, {"kind", b.kind}});

  json doc{{"name", m.name},
           {"artifacts", artifacts},
           {"pipeline", pipeline},
           {"backends", backends},
           {"credentials", m.credentials},
           {"provenance", provenance_to_json(m.provenance)}};
  if (m.paper_build) doc["paper_build"] = step_to_json(*m.paper_build);
  return doc.dump(2) + "\n";
}

std::string serialize_provenance(const HardwareProvenance& p) {
  return provenance_to_json(p).dump(2) + "\n";
}

HardwareProvenance parse_provenance_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  return parse_provenance(doc);
}

ValidationReport validate_manifest(const ProjectManifest& m,
                                   const Workspace& workspace) {
  ValidationReport report;

  for (const auto& a : m.artifacts) {
    if (workspace.find(a.path) == workspace.end())
      report.findings.push_back(
          {ValidationFindingKind::MissingArtifactFile,
           "artifact \"" + a.id + "\": no file at " + a.path});
  }

  if (!m.credentials.empty()) {
    for (const auto& a : m.artifacts) {
      auto it = workspace.find(a.path);
      if (it == workspace.end()) continue;
      for (const auto& leak : scan_for_credential_leaks(it->second, m.credentials))
        report.findings.push_back(
            {ValidationFindingKind::InlinedCredential,
             a.path + ":" + std::to_string(leak.line) + ": " + leak.reason +
                 " for credential " + leak.credential});
    }
    // The manifest's own fields, via the canonical rendering.
    for (const auto& leak :
         scan_for_credential_leaks(serialize_manifest(m), m.credentials))
      report.findings.push_back(
          {ValidationFindingKind::InlinedCredential,
           "manifest:" + std::to_string(leak.line) + ": " + leak.reason +
               " for credential " + leak.credential});
  }

  return report;
}

}  // namespace qrep
