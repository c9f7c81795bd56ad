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

#include <set>

#include "qrep/error.hpp"

namespace qrep {

namespace {

bool is_placeholder_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

const char* const kSourceRecipe = R"TMPL(# Build recipe ({{name}}, source form).
# Rebuilds the experiment environment from a public base image; declared
# dependencies are fetched from the network at build time.
FROM {{base_image}}
{{dependency_installs}}
COPY . /repro
ENTRYPOINT ["/bin/sh", "/repro/reproduce.sh"]
)TMPL";

const char* const kBinaryRecipe = R"TMPL(# Build recipe ({{name}}, binary form).
# Repackages the pre-built source image without touching the network, so the
# resulting container has no external dependencies. Build order: first build
# recipes/source.Dockerfile and tag it {{source_tag}}, then build this file.
FROM {{source_tag}}
COPY . /repro
ENTRYPOINT ["/bin/sh", "/repro/reproduce.sh"]
)TMPL";

const char* const kDispatcher = R"TMPL(#!/bin/sh
# reproduce.sh - single-command dispatcher for {{name}}.
# Generated file; edit qrep.json and regenerate rather than patching this.
#
# Usage: ./reproduce.sh [--with-paper]
#
# Live runs read declared credentials from the environment. Offline replays
# (QREP_REPLAY=1) run against a replay service and need no credentials.
set -eu

WITH_PAPER=0
for arg in "$@"; do
  case "$arg" in
    --with-paper) WITH_PAPER=1 ;;
    *) echo "reproduce.sh: unknown argument: $arg" >&2; exit 64 ;;
  esac
done

{{backend_setup}}
{{credential_setup}}
cd "$(dirname "$0")"
if [ -d artifacts ]; then cd artifacts; fi

{{steps}}
{{paper_steps}}
echo "reproduce.sh: pipeline finished" >&2
)TMPL";

const char* const kDocs = R"TMPL(# Reproduction package: {{name}}

Everything needed to re-run and re-evaluate this experiment is bundled in
this package. One command reproduces the whole pipeline:

    ./reproduce.sh

{{credentials_note}}
## Package layout

- `qrep.json` - manifest this package was generated from
- `PROVENANCE.json` - hardware provenance record
- `reproduce.sh` - single-command dispatcher (`--with-paper` also builds the paper)
- `recipes/source.Dockerfile` - container recipe, source form
- `recipes/binary.Dockerfile` - container recipe, binary form (build the source image first; the recipe header names the expected tag)
- `artifacts/` - bundled project files
{{results_line}}
## Reproduction steps

The dispatcher runs the following steps in order, from the `artifacts/`
directory:

{{step_sections}}
## Hardware provenance

{{provenance_summary}}
{{replay_section}})TMPL";

}  // namespace

RenderedTemplate render_template(
    std::string_view tmpl, const std::map<std::string, std::string>& bindings) {
  RenderedTemplate result;
  std::set<std::string> used;
  std::string& out = result.text;
  out.reserve(tmpl.size());

  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '\\' && i + 2 < tmpl.size() && tmpl[i + 1] == '{' &&
        tmpl[i + 2] == '{') {
      out += "{{";
      i += 3;
      continue;
    }
    if (tmpl[i] == '{' && i + 1 < tmpl.size() && tmpl[i + 1] == '{') {
      std::size_t name_start = i + 2;
      std::size_t p = name_start;
      while (p < tmpl.size() && is_placeholder_char(tmpl[p])) ++p;
      if (p == name_start || p + 1 >= tmpl.size() || tmpl[p] != '}' ||
          tmpl[p + 1] != '}')
        throw Error(ErrorCode::TemplateSyntax,
                    "malformed placeholder at offset " + std::to_string(i));
      std::string name(tmpl.substr(name_start, p - name_start));
      auto it = bindings.find(name);
      if (it == bindings.end())
        throw Error(ErrorCode::UnboundPlaceholder, name);
      out += it->second;
      used.insert(name);
      i = p + 2;
      continue;
    }
    out += tmpl[i];
    ++i;
  }

  for (const auto& [name, value] : bindings) {
    (void)value;
    if (used.find(name) == used.end()) result.unused_bindings.push_back(name);
  }
  return result;
}

const TemplateSet& builtin_templates() {
  static const TemplateSet templates = {
      {"source.Dockerfile", kSourceRecipe},
      {"binary.Dockerfile", kBinaryRecipe},
      {"reproduce.sh", kDispatcher},
      {"README.md", kDocs},
  };
  return templates;
}

}  // namespace qrep
