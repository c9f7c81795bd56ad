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

#include "qrep/util.hpp"

#include <array>
#include <cstdint>

#include "qrep/error.hpp"

namespace qrep {

namespace {

const char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

bool is_value_char(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '+' || c == '/' || c == '=' ||
         c == '_' || c == '-';
}

bool is_word_char(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::string base64_encode(std::string_view bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 3 <= bytes.size()) {
    std::uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16) |
                      (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                      static_cast<unsigned char>(bytes[i + 2]);
    out += kB64Alphabet[(v >> 18) & 0x3f];
    out += kB64Alphabet[(v >> 12) & 0x3f];
    out += kB64Alphabet[(v >> 6) & 0x3f];
    out += kB64Alphabet[v & 0x3f];
    i += 3;
  }
  const std::size_t rest = bytes.size() - i;
  if (rest == 1) {
    std::uint32_t v = static_cast<unsigned char>(bytes[i]) << 16;
    out += kB64Alphabet[(v >> 18) & 0x3f];
    out += kB64Alphabet[(v >> 12) & 0x3f];
    out += "==";
  } else if (rest == 2) {
    std::uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16) |
                      (static_cast<unsigned char>(bytes[i + 1]) << 8);
    out += kB64Alphabet[(v >> 18) & 0x3f];
    out += kB64Alphabet[(v >> 12) & 0x3f];
    out += kB64Alphabet[(v >> 6) & 0x3f];
    out += '=';
  }
  return out;
}

std::string base64_decode(std::string_view text) {
  std::array<int, 256> rev;
  rev.fill(-1);
  for (int i = 0; i < 64; ++i)
    rev[static_cast<unsigned char>(kB64Alphabet[i])] = i;

  if (text.size() % 4 != 0)
    throw Error(ErrorCode::MalformedDocument, "base64 length not a multiple of 4");

  std::string out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    int vals[4];
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      char c = text[i + k];
      if (c == '=' && i + 4 == text.size() && k >= 2) {
        vals[k] = 0;
        ++pad;
        continue;
      }
      vals[k] = rev[static_cast<unsigned char>(c)];
      if (vals[k] < 0 || pad > 0)
        throw Error(ErrorCode::MalformedDocument, "invalid base64 character");
    }
    std::uint32_t v = (vals[0] << 18) | (vals[1] << 12) | (vals[2] << 6) | vals[3];
    out += static_cast<char>((v >> 16) & 0xff);
    if (pad < 2) out += static_cast<char>((v >> 8) & 0xff);
    if (pad < 1) out += static_cast<char>(v & 0xff);
  }
  return out;
}

std::string replace_all(std::string text, std::string_view needle,
                        std::string_view replacement) {
  if (needle.empty()) return text;
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (true) {
    std::size_t hit = text.find(needle, pos);
    if (hit == std::string::npos) {
      out.append(text, pos, std::string::npos);
      return out;
    }
    out.append(text, pos, hit - pos);
    out.append(replacement);
    pos = hit + needle.size();
  }
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

bool is_safe_relative_path(std::string_view path) {
  if (path.empty() || path.front() == '/') return false;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    std::size_t sep = path.find('/', pos);
    std::string_view seg = path.substr(
        pos, (sep == std::string_view::npos ? path.size() : sep) - pos);
    if (seg.empty() || seg == "." || seg == "..") return false;
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return true;
}

std::vector<CredentialLeak> scan_for_credential_leaks(
    std::string_view content, const std::vector<std::string>& credential_names) {
  std::vector<CredentialLeak> leaks;
  if (credential_names.empty()) return leaks;

  const auto lines = split_lines(content);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    for (const auto& name : credential_names) {
      if (name.empty()) continue;
      std::size_t at = 0;
      bool name_on_line = false;
      bool assignment = false;
      while ((at = line.find(name, at)) != std::string::npos) {
        // Require the name to stand alone as a word.
        const bool left_ok = at == 0 || !is_word_char(line[at - 1]);
        const std::size_t end = at + name.size();
        const bool right_ok = end >= line.size() || !is_word_char(line[end]);
        if (left_ok && right_ok) {
          name_on_line = true;
          std::size_t p = end;
          while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
          if (p < line.size() && (line[p] == '=' || line[p] == ':')) {
            ++p;
            while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
            if (p < line.size() && (line[p] == '"' || line[p] == '\'')) ++p;
            std::size_t run = 0;
            while (p + run < line.size() &&
                   is_value_char(static_cast<unsigned char>(line[p + run])))
              ++run;
            if (run >= 4) assignment = true;
          }
        }
        at = end;
      }
      if (!name_on_line) continue;
      if (assignment) {
        leaks.push_back({li + 1, name, "inline assignment"});
        continue;
      }
      // Entropy heuristic: a long base64-ish run next to a credential name.
      std::size_t run = 0;
      bool long_token = false;
      for (unsigned char c : line) {
        run = is_value_char(c) ? run + 1 : 0;
        if (run >= 32 && line.find(name) != std::string::npos) {
          long_token = true;
          break;
        }
      }
      // The name itself never counts as the token.
      if (long_token && name.size() < 32)
        leaks.push_back({li + 1, name, "high-entropy token"});
      else if (long_token && name.size() >= 32) {
        // A >=32-char credential name would match itself; require a run that
        // is not exactly the name.
        std::string stripped = replace_all(line, name, "");
        std::size_t r = 0;
        for (unsigned char c : stripped) {
          r = is_value_char(c) ? r + 1 : 0;
          if (r >= 32) {
            leaks.push_back({li + 1, name, "high-entropy token"});
            break;
          }
        }
      }
    }
  }
  return leaks;
}

}  // namespace qrep
