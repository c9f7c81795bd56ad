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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace qrep {

struct HttpHeader {
  std::string name;
  std::string value;
};

struct BackendRequest {
  std::string method;
  std::string path;  // request target as sent on the wire, query included
  std::vector<HttpHeader> headers;
  std::string body;
  std::string content_type;
};

struct BackendResponse {
  int status = 0;
  std::string body;
  std::string content_type;

  bool operator==(const BackendResponse&) const = default;
};

/// Canonical request form: method '\n' path '\n' normalized body. Headers
/// are excluded entirely; vendor APIs send volatile auth and tracing headers
/// that would defeat replay matching. JSON bodies are re-emitted with keys
/// recursively sorted and insignificant whitespace dropped; anything else
/// passes through verbatim. Every occurrence of every supplied credential
/// value (raw or JSON-escaped) is replaced by the redaction token before the
/// bytes are returned, so live and replayed requests hash identically.
std::string canonicalize_request(std::string_view method, std::string_view path,
                                 const std::vector<HttpHeader>& headers,
                                 std::string_view body,
                                 const std::vector<std::string>& credential_values);

/// Replaces every occurrence of every credential value (and, where it
/// differs, its JSON-escaped spelling) with the redaction token.
std::string redact(std::string text, const std::vector<std::string>& credential_values);

struct InteractionRecord {
  std::uint64_t seq = 0;
  std::string method;          // redacted
  std::string path;            // redacted
  std::string canonical_body;  // redacted; empty on records loaded from disk
  std::string digest;          // SHA-256 hex of the canonical request
  BackendResponse response;    // redacted
};

/// Ordered, credential-redacted record of backend interactions. A transcript
/// is either open for recording or sealed for replay, never both; loading
/// from disk always seals.
class InteractionTranscript {
 public:
  static InteractionTranscript for_recording(std::string backend_kind);

  /// Parses `transcript.jsonl` (one object per line, fields exactly
  /// {seq, method, path, digest, status, content_type, body_b64}).
  /// Throws Error{MalformedDocument} on any deviation, including
  /// non-consecutive seq values. The result is sealed.
  static InteractionTranscript from_jsonl(std::string_view text);

  /// Appends the interaction with the next seq. Credential values are
  /// scrubbed from everything stored. Throws Error{TranscriptSealed} when
  /// the transcript is not open for recording.
  void record(const BackendRequest& request, const BackendResponse& response,
              const std::vector<std::string>& credential_values);

  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }

  std::string to_jsonl() const;

  const std::vector<InteractionRecord>& records() const { return records_; }
  const std::string& backend_kind() const { return backend_kind_; }
  const std::string& tool_version() const { return tool_version_; }

 private:
  InteractionTranscript() = default;

  std::vector<InteractionRecord> records_;
  std::string backend_kind_;
  std::string tool_version_;
  bool sealed_ = false;
};

/// Replay cursor state over a sealed transcript. When the same digest was
/// recorded several times (quantum jobs legitimately resubmit identical
/// requests for fresh samples), responses are served in recorded order.
/// Thread-safe; cursor updates are atomic with respect to each other.
class ReplaySession {
 public:
  /// Throws Error{TranscriptSealed} if the transcript is still recording.
  explicit ReplaySession(const InteractionTranscript& transcript);

  /// Matches by canonical digest. Throws Error{UnmatchedRequest} for a
  /// digest that was never recorded and Error{DigestExhausted} once every
  /// recording for the digest has been served.
  BackendResponse lookup(const BackendRequest& request,
                         const std::vector<std::string>& credential_values = {});

 private:
  const InteractionTranscript& transcript_;
  std::map<std::string, std::vector<std::size_t>> by_digest_;
  std::map<std::string, std::size_t> cursors_;
  std::mutex mutex_;
};

/// Deterministic pseudo-measurement histogram for (job, seed): the test
/// stand-in for vendor QPU services. Identical inputs give identical bytes;
/// an empty job yields an empty histogram.
std::string simulate_backend(std::string_view job, std::uint64_t seed);

/// True when an HTTP round trip to `base_url` completes (any status counts;
/// only connection-level failure means unreachable).
bool backend_reachable(const std::string& base_url);

/// HTTP service answering every request from the transcript via a
/// ReplaySession. Unknown or exhausted digests get 410 with a diagnostic
/// body naming the digest.
class ReplayServer {
 public:
  explicit ReplayServer(const InteractionTranscript& transcript,
                        std::string host = "127.0.0.1");
  ~ReplayServer();

  /// Binds (ephemeral port when 0) and serves on a background thread.
  /// Returns the bound port. Throws Error{BindFailure}.
  int start(int port = 0);
  void stop();
  std::string url() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Forwarding proxy that records every exchange into a transcript while the
/// live experiment runs. Recording is serialized: one exchange at a time.
class RecordingProxy {
 public:
  RecordingProxy(InteractionTranscript& transcript, std::string upstream_url,
                 std::vector<std::string> credential_values,
                 std::string host = "127.0.0.1");
  ~RecordingProxy();

  int start(int port = 0);
  void stop();
  std::string url() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// In-process stand-in for a vendor quantum backend, driven by
/// simulate_backend(). Jobs are submitted with POST /jobs (a "token" field
/// is required, echoed back, and deliberately never influences results) and
/// collected with GET /jobs/<id>/result.
class SimulatedBackendServer {
 public:
  explicit SimulatedBackendServer(std::uint64_t seed,
                                  std::string host = "127.0.0.1");
  ~SimulatedBackendServer();

  int start(int port = 0);
  void stop();
  std::string url() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace qrep
