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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "qrep/error.hpp"

using namespace qrep;

namespace {

const char* const kMinimalManifest = R"({
  "name": "tiny",
  "artifacts": [
    {"id": "src", "kind": "source", "path": "main.py"}
  ],
  "pipeline": [
    {"kind": "build", "command": "make", "description": "compile"},
    {"kind": "run", "command": "./run", "description": "execute"},
    {"kind": "analyze", "command": "./eval", "description": "evaluate"}
  ]
})";

ErrorCode code_of(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected parse_manifest to throw");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("minimal document parses with defaults applied") {
  // Hand-constructed expected value for the fixture above.
  ProjectManifest expected;
  expected.name = "tiny";
  expected.artifacts = {{"src", ArtifactKind::source, "main.py"}};
  expected.pipeline = {{StepKind::build, "make", "compile"},
                       {StepKind::run, "./run", "execute"},
                       {StepKind::analyze, "./eval", "evaluate"}};

  const ProjectManifest m = parse_manifest(kMinimalManifest);
  CHECK(m == expected);
  CHECK(m.backends.empty());
  CHECK(m.credentials.empty());
  CHECK(m.provenance == HardwareProvenance{});
  CHECK_FALSE(m.paper_build.has_value());
}

TEST_CASE("missing required keys name the key") {
  std::string text = R"({"name": "x", "artifacts": []})";
  try {
    parse_manifest(text);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingField);
    CHECK(std::string(e.what()).find("pipeline") != std::string::npos);
  }
}

TEST_CASE("duplicate artifact ids are rejected") {
  std::string text = R"({
    "name": "x",
    "artifacts": [
      {"id": "src", "kind": "source", "path": "a.py"},
      {"id": "src", "kind": "data", "path": "b.csv"}
    ],
    "pipeline": [
      {"kind": "build", "command": "b"},
      {"kind": "run", "command": "r"},
      {"kind": "analyze", "command": "a"}
    ]
  })";
  try {
    parse_manifest(text);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateArtifactId);
    CHECK(std::string(e.what()).find("src") != std::string::npos);
  }
}

TEST_CASE("path rules") {
  auto with_path = [](const std::string& path) {
    return std::string(R"({"name":"x","artifacts":[{"id":"a","kind":"data","path":")") +
           path +
           R"("}],"pipeline":[{"kind":"build","command":"b"},{"kind":"run","command":"r"},{"kind":"analyze","command":"a"}]})";
  };
  CHECK(code_of(with_path("/abs/path")) == ErrorCode::InvalidPath);
  CHECK(code_of(with_path("a/../b")) == ErrorCode::InvalidPath);
  CHECK(code_of(with_path("..")) == ErrorCode::InvalidPath);
  CHECK_NOTHROW(parse_manifest(with_path("deep/nested/ok.txt")));
}

TEST_CASE("not JSON at all") {
  CHECK(code_of("{nope") == ErrorCode::MalformedDocument);
  CHECK(code_of("[1,2,3]") == ErrorCode::MalformedDocument);
}

TEST_CASE("unknown keys are rejected, $comment is tolerated") {
  std::string unknown = R"({
    "name": "x", "artifacts": [], "pipelines": []
  })";
  CHECK(code_of(unknown) == ErrorCode::UnknownField);

  std::string commented = R"({
    "$comment": "skeleton notes live here",
    "name": "x",
    "artifacts": [{"$comment": "note", "id": "a", "kind": "data", "path": "d.csv"}],
    "pipeline": [
      {"kind": "build", "command": "b"},
      {"kind": "run", "command": "r"},
      {"kind": "analyze", "command": "a"}
    ]
  })";
  CHECK_NOTHROW(parse_manifest(commented));
}

TEST_CASE("pipeline rules") {
  auto with_pipeline = [](const std::string& steps) {
    return std::string(R"({"name":"x","artifacts":[],"pipeline":[)") + steps +
           "]}";
  };
  const std::string b = R"({"kind":"build","command":"b"})";
  const std::string r = R"({"kind":"run","command":"r"})";
  const std::string a = R"({"kind":"analyze","command":"a"})";
  const std::string p = R"({"kind":"paper","command":"p"})";

  CHECK(code_of(with_pipeline("")) == ErrorCode::InvalidPipeline);
  CHECK(code_of(with_pipeline(b + "," + r)) == ErrorCode::InvalidPipeline);
  CHECK(code_of(with_pipeline(r + "," + b + "," + a)) ==
        ErrorCode::InvalidPipeline);
  CHECK_NOTHROW(parse_manifest(with_pipeline(b + "," + b + "," + r + "," + a)));
  CHECK_NOTHROW(parse_manifest(with_pipeline(b + "," + r + "," + a + "," + p)));
  CHECK(code_of(with_pipeline(b + "," + p + "," + r + "," + a)) ==
        ErrorCode::InvalidPipeline);

  // Empty commands are rejected.
  CHECK(code_of(with_pipeline(R"({"kind":"build","command":""},)" + r + "," +
                              a)) == ErrorCode::MalformedDocument);
}

TEST_CASE("paper_build must be a paper step") {
  std::string text = R"({
    "name": "x", "artifacts": [],
    "pipeline": [
      {"kind": "build", "command": "b"},
      {"kind": "run", "command": "r"},
      {"kind": "analyze", "command": "a"}
    ],
    "paper_build": {"kind": "build", "command": "latexmk"}
  })";
  CHECK(code_of(text) == ErrorCode::MalformedDocument);
}

TEST_CASE("round trip through canonical serialization") {
  const ProjectManifest once = parse_manifest(kMinimalManifest);
  const ProjectManifest twice = parse_manifest(serialize_manifest(once));
  CHECK(once == twice);
  CHECK(serialize_manifest(once) == serialize_manifest(twice));
}

TEST_CASE("round trip with every optional populated") {
  ProjectManifest m;
  m.name = "full_example";
  m.artifacts = {{"src", ArtifactKind::source, "code/run.py"},
                 {"cfg", ArtifactKind::config, "conf/settings.json"},
                 {"dat", ArtifactKind::data, "data/input.bin"},
                 {"res", ArtifactKind::results, "results/archive.csv"}};
  m.pipeline = {{StepKind::build, "make all", "build it"},
                {StepKind::run, "./run --hw", ""},
                {StepKind::analyze, "python eval.py", "crunch"},
                {StepKind::paper, "latexmk paper", "typeset"}};
  m.backends = {{"https://qpu.example/api", "ibmq"},
                {"http://127.0.0.1:9000", "simulated"}};
  m.credentials = {"QPU_TOKEN", "EXTRA_KEY"};
  m.provenance.machine_id = "TestQPU-5";
  m.provenance.input_generation = "uniform random";
  m.provenance.qbit_count = 5;
  m.provenance.topology = {{0, 1}, {1, 2}};
  m.provenance.input_transformations = "none";
  m.provenance.embedding_method = "identity";
  m.provenance.postprocessing = "averaging";
  m.provenance.timings.programming_us = 1;
  m.provenance.timings.readout_us = 3;
  m.provenance.runtime_measurement = "wall clock";
  m.provenance.heuristics = "fixed";
  m.paper_build = PipelineStep{StepKind::paper, "latexmk", "typeset"};

  CHECK(parse_manifest(serialize_manifest(m)) == m);
}

TEST_CASE("fuzzed artifact paths can never escape the package root") {
  // Independent containment oracle: resolve segments with a stack and check
  // the result stays under a virtual root.
  auto stays_inside = [](const std::string& path) {
    if (path.empty() || path.front() == '/') return false;
    std::vector<std::string> stack = {"root"};
    std::string segment;
    auto flush = [&](const std::string& seg) {
      if (seg.empty() || seg == ".") return true;  // would alias/normalize
      if (seg == "..") {
        stack.pop_back();
        return !stack.empty();
      }
      stack.push_back(seg);
      return true;
    };
    bool strict = true;
    for (char c : path) {
      if (c == '/') {
        if (segment.empty() || segment == "." || segment == "..") strict = false;
        if (!flush(segment)) return false;
        segment.clear();
      } else {
        segment += c;
      }
    }
    if (segment.empty() || segment == "." || segment == "..") strict = false;
    if (!flush(segment)) return false;
    return strict && stack.size() > 1;
  };

  const std::string alphabet = "ab./";
  std::mt19937 rng(99);
  int accepted = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::string path;
    const int len = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) path += alphabet[rng() % alphabet.size()];

    std::string text =
        R"({"name":"x","artifacts":[{"id":"a","kind":"data","path":)" +
        std::string("\"") + path + "\"" +
        R"(}],"pipeline":[{"kind":"build","command":"b"},{"kind":"run","command":"r"},{"kind":"analyze","command":"a"}]})";
    bool ok = true;
    try {
      parse_manifest(text);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      ++accepted;
      CHECK(stays_inside(path));
    }
  }
  CHECK(accepted > 0);  // the fuzz alphabet does produce valid paths
}

TEST_CASE("validation reports missing artifact files") {
  const ProjectManifest m = parse_manifest(kMinimalManifest);
  const auto report = validate_manifest(m, {});
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].kind == ValidationFindingKind::MissingArtifactFile);
  CHECK(report.findings[0].message.find("main.py") != std::string::npos);
}

TEST_CASE("validation flags inlined credentials in artifact contents") {
  std::string text = R"({
    "name": "x",
    "artifacts": [{"id": "cfg", "kind": "config", "path": "settings.ini"}],
    "pipeline": [
      {"kind": "build", "command": "b"},
      {"kind": "run", "command": "r"},
      {"kind": "analyze", "command": "a"}
    ],
    "credentials": ["QPU_TOKEN"]
  })";
  const ProjectManifest m = parse_manifest(text);

  Workspace clean = {{"settings.ini", "queue = main\n"}};
  CHECK(validate_manifest(m, clean).ok());

  // Planted token fixture: name followed by a value-like string.
  Workspace dirty = {{"settings.ini", "queue = main\nQPU_TOKEN=tok_4f9a2b\n"}};
  const auto report = validate_manifest(m, dirty);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].kind == ValidationFindingKind::InlinedCredential);
  CHECK(report.findings[0].message.find("settings.ini") != std::string::npos);
  CHECK(report.findings[0].message.find("QPU_TOKEN") != std::string::npos);
}

TEST_CASE("validation flags credentials inlined in manifest fields") {
  std::string text = R"({
    "name": "x",
    "artifacts": [],
    "pipeline": [
      {"kind": "build", "command": "b"},
      {"kind": "run", "command": "QPU_TOKEN=hunter2abc ./run"},
      {"kind": "analyze", "command": "a"}
    ],
    "credentials": ["QPU_TOKEN"]
  })";
  const ProjectManifest m = parse_manifest(text);
  const auto report = validate_manifest(m, {});
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].kind == ValidationFindingKind::InlinedCredential);
}

TEST_CASE("validation is pure") {
  const ProjectManifest m = parse_manifest(kMinimalManifest);
  Workspace ws = {{"main.py", "print('hi')\n"}};
  const auto a = validate_manifest(m, ws);
  const auto b = validate_manifest(m, ws);
  CHECK(a.findings.size() == b.findings.size());
  CHECK(a.ok());
}
