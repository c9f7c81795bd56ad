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
#include <utility>
#include <vector>

#include "qrep/package_tree.hpp"

namespace qrep {

/// All archive entries carry this fixed mtime (2021-01-01T00:00:00Z). Any
/// fixed value keeps archives byte-deterministic; zero is avoided because
/// some extraction tools flag it.
inline constexpr long long kArchiveEpoch = 1609459200;

/// Path of the embedded checksum file inside every archive.
inline constexpr const char* kChecksumPath = "CHECKSUMS.sha256";

struct ChecksumManifest {
  /// (sha256 hex, relative path), sorted by path. The checksum file itself
  /// is never listed.
  std::vector<std::pair<std::string, std::string>> entries;

  /// `sha256sum -c` compatible rendering: "<hex>  <path>\n" per entry.
  std::string render() const;
};

ChecksumManifest checksum_manifest(const PackageTree& tree);

/// SHA-256 of the rendered checksum manifest: a stable identity for citing
/// one exact package state.
std::string package_id(const PackageTree& tree);

/// Serializes the tree as a POSIX ustar archive (pax 'path' extension for
/// long names). Entries appear in lexicographic path order with the checksum
/// manifest embedded at CHECKSUMS.sha256; uid/gid are 0 with empty names,
/// mode is 0644 (0755 when the executable flag is set) and every mtime is
/// kArchiveEpoch, so the bytes are a pure function of the tree. Throws
/// Error{PathTooLong} for paths beyond 4096 bytes.
std::string build_archive(const PackageTree& tree);

/// Reads back an archive produced by build_archive (or any tar restricted to
/// regular files). Throws Error{CorruptArchive} on structural damage. The
/// checksum file is part of the returned tree when present.
PackageTree parse_archive(std::string_view archive);

struct ArchiveVerifyReport {
  bool no_checksum_manifest = false;
  std::vector<std::string> mismatched;            // hash differs
  std::vector<std::string> missing_from_archive;  // listed but absent
  std::vector<std::string> unlisted;              // present but not listed

  bool ok() const {
    return !no_checksum_manifest && mismatched.empty() &&
           missing_from_archive.empty() && unlisted.empty();
  }
};

/// Recomputes every file hash against the embedded CHECKSUMS.sha256.
ArchiveVerifyReport verify_archive(std::string_view archive);

}  // namespace qrep
