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

#include "qrep/templates.hpp"

#include "doctest.h"
#include "qrep/error.hpp"

using namespace qrep;

TEST_CASE("substitutes placeholders") {
  CHECK(render_template("Hello {{name}}", {{"name", "QPU"}}).text == "Hello QPU");
  CHECK(render_template("{{a}}-{{b}}-{{a}}", {{"a", "1"}, {"b", "2"}}).text ==
        "1-2-1");
}

TEST_CASE("no placeholders is the identity") {
  CHECK(render_template("no placeholders", {}).text == "no placeholders");
}

TEST_CASE("unbound placeholder is an error") {
  try {
    render_template("{{missing}}", {});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundPlaceholder);
    CHECK(std::string(e.what()).find("missing") != std::string::npos);
  }
}

TEST_CASE("escaped braces render literally") {
  CHECK(render_template("\\{{name}}", {}).text == "{{name}}");
  CHECK(render_template("a \\{{x}} b {{y}}", {{"y", "Y"}}).text ==
        "a {{x}} b Y");
}

TEST_CASE("unused bindings are warnings, not errors") {
  const auto r = render_template("plain", {{"left_over", "v"}});
  CHECK(r.text == "plain");
  REQUIRE(r.unused_bindings.size() == 1);
  CHECK(r.unused_bindings[0] == "left_over");
}

TEST_CASE("malformed placeholders are rejected") {
  CHECK_THROWS_AS(render_template("{{Bad Name}}", {}), Error);
  CHECK_THROWS_AS(render_template("{{unterminated", {}), Error);
  CHECK_THROWS_AS(render_template("{{}}", {}), Error);
}

TEST_CASE("builtin template set is complete") {
  const auto& t = builtin_templates();
  CHECK(t.count("source.Dockerfile") == 1);
  CHECK(t.count("binary.Dockerfile") == 1);
  CHECK(t.count("reproduce.sh") == 1);
  CHECK(t.count("README.md") == 1);
}
