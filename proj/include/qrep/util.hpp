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

namespace qrep {

std::string base64_encode(std::string_view bytes);
std::string base64_decode(std::string_view text);  // throws Error{MalformedDocument}

// Replaces every occurrence of `needle` in `text`. Empty needles are a no-op.
std::string replace_all(std::string text, std::string_view needle,
                        std::string_view replacement);

// Splits on '\n'; a trailing newline does not produce an empty final line.
std::vector<std::string> split_lines(std::string_view text);

// A path is tree-safe when it is relative, uses '/' separators, and contains
// no "", "." or ".." segments. Such a path can never escape the package root.
bool is_safe_relative_path(std::string_view path);

// The token substituted for credential values wherever they are scrubbed.
inline constexpr const char* kRedactedToken = "\xc2\xabREDACTED\xc2\xbb";

// One credential-adjacency hit found by scan_for_credential_leaks.
struct CredentialLeak {
  std::size_t line;  // 1-based
  std::string credential;
  std::string reason;  // "inline assignment" or "high-entropy token"
};

// Name-anchored secret scan: a line leaks when a declared credential name is
// followed by '='/':' and a value-like token (>= 4 chars of [A-Za-z0-9+/=_-]),
// or when the name shares a line with a token of >= 32 such chars. Shell
// default-expansion forms like ${NAME:-} stay clean by construction.
std::vector<CredentialLeak> scan_for_credential_leaks(
    std::string_view content, const std::vector<std::string>& credential_names);

}  // namespace qrep
