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

#include "qrep/replay.hpp"

#include <random>

#include "json.hpp"
#include "qrep/error.hpp"
#include "qrep/sha256.hpp"
#include "qrep/util.hpp"
#include "qrep/version.hpp"

namespace qrep {

namespace {

using nlohmann::json;

// JSON spelling of a string value, without the surrounding quotes.
std::string json_escaped(const std::string& value) {
  std::string dumped = json(value).dump();
  return dumped.substr(1, dumped.size() - 2);
}

}  // namespace

std::string redact(std::string text,
                   const std::vector<std::string>& credential_values) {
  for (const auto& value : credential_values) {
    if (value.empty()) continue;
    text = replace_all(std::move(text), value, kRedactedToken);
    const std::string escaped = json_escaped(value);
    if (escaped != value)
      text = replace_all(std::move(text), escaped, kRedactedToken);
  }
  return text;
}

std::string canonicalize_request(
    std::string_view method, std::string_view path,
    const std::vector<HttpHeader>& headers, std::string_view body,
    const std::vector<std::string>& credential_values) {
  (void)headers;  // excluded from the canonical form by contract

  std::string normalized;
  json parsed = json::parse(body, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (!parsed.is_discarded())
    normalized = parsed.dump();
  else
    normalized = std::string(body);

  std::string canonical;
  canonical.reserve(method.size() + path.size() + normalized.size() + 2);
  canonical.append(method);
  canonical += '\n';
  canonical.append(path);
  canonical += '\n';
  canonical.append(normalized);
  return redact(std::move(canonical), credential_values);
}

InteractionTranscript InteractionTranscript::for_recording(std::string backend_kind) {
  InteractionTranscript t;
  t.backend_kind_ = std::move(backend_kind);
  t.tool_version_ = kQrepVersion;
  return t;
}

void InteractionTranscript::record(
    const BackendRequest& request, const BackendResponse& response,
    const std::vector<std::string>& credential_values) {
  if (sealed_)
    throw Error(ErrorCode::TranscriptSealed,
                "transcript is sealed for replay; recording is not possible");

  const std::string canonical =
      canonicalize_request(request.method, request.path, request.headers,
                           request.body, credential_values);

  InteractionRecord rec;
  rec.seq = records_.size();
  // The canonical form is method \n path \n body; paths cannot contain
  // newlines, so the first two splits are unambiguous.
  const std::size_t first = canonical.find('\n');
  const std::size_t second = canonical.find('\n', first + 1);
  rec.method = canonical.substr(0, first);
  rec.path = canonical.substr(first + 1, second - first - 1);
  rec.canonical_body = canonical.substr(second + 1);
  rec.digest = sha256_hex(canonical);
  rec.response.status = response.status;
  rec.response.body = redact(response.body, credential_values);
  rec.response.content_type = redact(response.content_type, credential_values);
  records_.push_back(std::move(rec));
}

std::string InteractionTranscript::to_jsonl() const {
  std::string out;
  for (const auto& rec : records_) {
    json line{{"seq", rec.seq},
              {"method", rec.method},
              {"path", rec.path},
              {"digest", rec.digest},
              {"status", rec.response.status},
              {"content_type", rec.response.content_type},
              {"body_b64", base64_encode(rec.response.body)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

InteractionTranscript InteractionTranscript::from_jsonl(std::string_view text) {
  static const char* kFields[] = {"seq",    "method",       "path",    "digest",
                                  "status", "content_type", "body_b64"};

  InteractionTranscript t;
  std::uint64_t expected_seq = 0;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object())
      throw Error(ErrorCode::MalformedDocument,
                  "transcript line " + std::to_string(expected_seq + 1) +
                      " is not a JSON object");
    if (obj.size() != 7)
      throw Error(ErrorCode::MalformedDocument,
                  "transcript records carry exactly 7 fields");
    for (const char* field : kFields)
      if (!obj.contains(field))
        throw Error(ErrorCode::MalformedDocument,
                    std::string("transcript record lacks \"") + field + "\"");
    if (!obj["seq"].is_number_unsigned() && !obj["seq"].is_number_integer())
      throw Error(ErrorCode::MalformedDocument, "seq must be an integer");

    InteractionRecord rec;
    rec.seq = obj["seq"].get<std::uint64_t>();
    if (rec.seq != expected_seq)
      throw Error(ErrorCode::MalformedDocument,
                  "transcript seq values must be consecutive from 0");
    ++expected_seq;
    rec.method = obj["method"].get<std::string>();
    rec.path = obj["path"].get<std::string>();
    rec.digest = obj["digest"].get<std::string>();
    rec.response.status = obj["status"].get<int>();
    rec.response.content_type = obj["content_type"].get<std::string>();
    rec.response.body = base64_decode(obj["body_b64"].get<std::string>());
    t.records_.push_back(std::move(rec));
  }
  t.sealed_ = true;
  return t;
}

ReplaySession::ReplaySession(const InteractionTranscript& transcript)
    : transcript_(transcript) {
  if (!transcript.sealed())
    throw Error(ErrorCode::TranscriptSealed,
                "replay requires a sealed transcript");
  for (std::size_t i = 0; i < transcript.records().size(); ++i)
    by_digest_[transcript.records()[i].digest].push_back(i);
}

BackendResponse ReplaySession::lookup(
    const BackendRequest& request,
    const std::vector<std::string>& credential_values) {
  const std::string digest = sha256_hex(
      canonicalize_request(request.method, request.path, request.headers,
                           request.body, credential_values));

  std::lock_guard<std::mutex> lock(mutex_);
  auto it = by_digest_.find(digest);
  if (it == by_digest_.end())
    throw Error(ErrorCode::UnmatchedRequest,
                "no recorded interaction for digest " + digest +
                    "; the request diverges from the recorded experiment");
  std::size_t& cursor = cursors_[digest];
  if (cursor >= it->second.size())
    throw Error(ErrorCode::DigestExhausted,
                "all " + std::to_string(it->second.size()) +
                    " recorded responses consumed for digest " + digest);
  return transcript_.records()[it->second[cursor++]].response;
}

std::string simulate_backend(std::string_view job, std::uint64_t seed) {
  if (job.empty())
    return json{{"backend", "simulated"}, {"counts", json::object()}, {"shots", 0}}
        .dump();

  // First eight digest bytes of the job, big-endian, xor'd with the seed.
  const std::string digest = sha256_hex(job);
  std::uint64_t h = 0;
  for (int i = 0; i < 16; ++i) {
    char c = digest[i];
    h = (h << 4) | static_cast<std::uint64_t>(
                       c <= '9' ? c - '0' : c - 'a' + 10);
  }

  std::mt19937_64 rng(h ^ seed);
  const int qubits = 2 + static_cast<int>(h % 3);
  const int shots = 128;
  std::map<std::string, int> counts;
  for (int s = 0; s < shots; ++s) {
    const std::uint64_t outcome = rng() % (1ull << qubits);
    std::string bits;
    for (int b = qubits - 1; b >= 0; --b)
      bits += ((outcome >> b) & 1) ? '1' : '0';
    ++counts[bits];
  }

  json histogram = json::object();
  for (const auto& [bits, n] : counts) histogram[bits] = n;
  return json{{"backend", "simulated"}, {"counts", histogram}, {"shots", shots}}
      .dump();
}

}  // namespace qrep
