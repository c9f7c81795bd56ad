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
#include <string>
#include <string_view>
#include <vector>

namespace qrep {

/// Template name -> template text. Placeholders are written {{key}} with key
/// in [a-z0-9_]+; "\{{" renders a literal "{{". Deliberately no loops or
/// conditionals: anything data-dependent is composed in the generator and
/// passed in as a binding, keeping the templates auditable.
using TemplateSet = std::map<std::string, std::string>;

struct RenderedTemplate {
  std::string text;
  std::vector<std::string> unused_bindings;  // warnings, never errors
};

/// Substitutes every placeholder. Throws Error{UnboundPlaceholder} for a
/// placeholder with no binding and Error{TemplateSyntax} for "{{" that does
/// not form a well-formed placeholder.
RenderedTemplate render_template(std::string_view tmpl,
                                 const std::map<std::string, std::string>& bindings);

/// The built-in generic artefacts: "source.Dockerfile", "binary.Dockerfile",
/// "reproduce.sh" and "README.md" skeletons.
const TemplateSet& builtin_templates();

}  // namespace qrep
