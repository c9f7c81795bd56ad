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

#include "qrep/packager.hpp"

#include <cstdio>
#include <cstring>
#include <map>

#include "qrep/error.hpp"
#include "qrep/sha256.hpp"
#include "qrep/util.hpp"

namespace qrep {

namespace {

constexpr std::size_t kBlockSize = 512;
constexpr std::size_t kMaxPathBytes = 4096;

// POSIX.1-1988 ustar header. Field layout per the tar(5) man page.
struct UstarHeader {
  char name[100];
  char mode[8];
  char uid[8];
  char gid[8];
  char size[12];
  char mtime[12];
  char checksum[8];
  char typeflag;
  char linkname[100];
  char magic[6];
  char version[2];
  char uname[32];
  char gname[32];
  char devmajor[8];
  char devminor[8];
  char prefix[155];
  char pad[12];
};
static_assert(sizeof(UstarHeader) == kBlockSize, "bad ustar header layout");

UstarHeader make_header() {
  UstarHeader hdr = {};
  std::memcpy(hdr.magic, "ustar", 6);  // includes the NUL
  std::memcpy(hdr.version, "00", 2);
  std::snprintf(hdr.uid, sizeof(hdr.uid), "%07o", 0u);
  std::snprintf(hdr.gid, sizeof(hdr.gid), "%07o", 0u);
  std::snprintf(hdr.mtime, sizeof(hdr.mtime), "%011llo",
                static_cast<unsigned long long>(kArchiveEpoch));
  std::snprintf(hdr.devmajor, sizeof(hdr.devmajor), "%07o", 0u);
  std::snprintf(hdr.devminor, sizeof(hdr.devminor), "%07o", 0u);
  return hdr;
}

void finalize_checksum(UstarHeader& hdr) {
  std::memset(hdr.checksum, ' ', sizeof(hdr.checksum));
  unsigned sum = 0;
  const auto* bytes = reinterpret_cast<const unsigned char*>(&hdr);
  for (std::size_t i = 0; i < sizeof(hdr); ++i) sum += bytes[i];
  std::snprintf(hdr.checksum, sizeof(hdr.checksum), "%06o", sum);
  hdr.checksum[7] = ' ';
}

void append_block(std::string& out, const UstarHeader& hdr) {
  out.append(reinterpret_cast<const char*>(&hdr), sizeof(hdr));
}

void append_padded(std::string& out, std::string_view data) {
  out.append(data);
  const std::size_t rem = data.size() % kBlockSize;
  if (rem != 0) out.append(kBlockSize - rem, '\0');
}

// A path fits directly when it is under 100 bytes, or splits at a '/' into a
// <=155-byte prefix and a <100-byte name. Everything else gets a pax header.
bool split_ustar_path(std::string_view path, std::string_view& prefix,
                      std::string_view& name) {
  if (path.size() < sizeof(UstarHeader::name)) {
    prefix = {};
    name = path;
    return true;
  }
  std::size_t sep = path.rfind('/', sizeof(UstarHeader::prefix));
  if (sep == std::string_view::npos) return false;
  if (path.size() - sep - 1 >= sizeof(UstarHeader::name)) return false;
  prefix = path.substr(0, sep);
  name = path.substr(sep + 1);
  return true;
}

// "<len> path=<value>\n" where <len> counts the whole record.
std::string pax_record(std::string_view key, std::string_view value) {
  std::size_t base = key.size() + value.size() + 3;  // ' ', '=', '\n'
  std::size_t total = base + std::to_string(base).size();
  total = base + std::to_string(total).size();
  return std::to_string(total) + " " + std::string(key) + "=" +
         std::string(value) + "\n";
}

void append_pax_header(std::string& out, std::string_view path) {
  std::string record = pax_record("path", path);
  UstarHeader hdr = make_header();
  hdr.typeflag = 'x';
  std::snprintf(hdr.mode, sizeof(hdr.mode), "%07o", 0644u);
  std::snprintf(hdr.size, sizeof(hdr.size), "%011llo",
                static_cast<unsigned long long>(record.size()));
  finalize_checksum(hdr);
  append_block(out, hdr);
  append_padded(out, record);
}

void append_file(std::string& out, const std::string& path,
                 const PackageFile& file) {
  if (path.size() > kMaxPathBytes)
    throw Error(ErrorCode::PathTooLong, path.substr(0, 64) + "...");

  std::string_view prefix;
  std::string_view name;
  const bool fits = split_ustar_path(path, prefix, name);
  if (!fits) append_pax_header(out, path);

  UstarHeader hdr = make_header();
  if (fits) {
    std::memcpy(hdr.name, name.data(), name.size());
    std::memcpy(hdr.prefix, prefix.data(), prefix.size());
  }
  hdr.typeflag = '0';
  std::snprintf(hdr.mode, sizeof(hdr.mode), "%07o",
                file.executable ? 0755u : 0644u);
  std::snprintf(hdr.size, sizeof(hdr.size), "%011llo",
                static_cast<unsigned long long>(file.content.size()));
  finalize_checksum(hdr);
  append_block(out, hdr);
  append_padded(out, file.content);
}

unsigned long long parse_octal(const char* field, std::size_t size) {
  unsigned long long value = 0;
  for (std::size_t i = 0; i < size; ++i) {
    char c = field[i];
    if (c == '\0') break;
    if (c == ' ') continue;
    if (c < '0' || c > '7')
      throw Error(ErrorCode::CorruptArchive, "bad octal field");
    value = value * 8 + static_cast<unsigned long long>(c - '0');
  }
  return value;
}

bool is_zero_block(std::string_view block) {
  return block.find_first_not_of('\0') == std::string_view::npos;
}

// Extracts the value of the pax "path" record, if any.
std::string pax_path_override(std::string_view data) {
  std::string path;
  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t space = data.find(' ', pos);
    if (space == std::string_view::npos) break;
    unsigned long long len = 0;
    for (std::size_t i = pos; i < space; ++i) {
      if (data[i] < '0' || data[i] > '9')
        throw Error(ErrorCode::CorruptArchive, "bad pax record length");
      len = len * 10 + static_cast<unsigned long long>(data[i] - '0');
    }
    if (len < space - pos + 2 || pos + len > data.size())
      throw Error(ErrorCode::CorruptArchive, "bad pax record length");
    std::string_view record = data.substr(space + 1, pos + len - space - 2);
    std::size_t eq = record.find('=');
    if (eq != std::string_view::npos && record.substr(0, eq) == "path")
      path = std::string(record.substr(eq + 1));
    pos += len;
  }
  return path;
}

}  // namespace

std::string ChecksumManifest::render() const {
  std::string out;
  for (const auto& [hash, path] : entries) out += hash + "  " + path + "\n";
  return out;
}

ChecksumManifest checksum_manifest(const PackageTree& tree) {
  ChecksumManifest manifest;
  for (const auto& [path, file] : tree) {
    if (path == kChecksumPath) continue;  // never lists itself
    manifest.entries.emplace_back(sha256_hex(file.content), path);
  }
  return manifest;
}

std::string package_id(const PackageTree& tree) {
  return sha256_hex(checksum_manifest(tree).render());
}

std::string build_archive(const PackageTree& tree) {
  // Merge the checksum file into the lexicographic entry order. A stale
  // CHECKSUMS.sha256 in the tree (e.g. from re-packing an extracted archive)
  // is replaced by the freshly computed one.
  std::map<std::string, const PackageFile*> entries;
  for (const auto& [path, file] : tree) {
    if (path != kChecksumPath) entries[path] = &file;
  }
  const PackageFile checksums{checksum_manifest(tree).render(), false};
  entries[kChecksumPath] = &checksums;

  std::string out;
  for (const auto& [path, file] : entries) append_file(out, path, *file);
  out.append(2 * kBlockSize, '\0');
  return out;
}

PackageTree parse_archive(std::string_view archive) {
  if (archive.size() % kBlockSize != 0)
    throw Error(ErrorCode::CorruptArchive, "size not a multiple of 512");

  PackageTree tree;
  std::string pending_path;
  std::size_t pos = 0;
  while (pos + kBlockSize <= archive.size()) {
    std::string_view block = archive.substr(pos, kBlockSize);
    if (is_zero_block(block)) break;

    UstarHeader hdr;
    std::memcpy(&hdr, block.data(), kBlockSize);
    if (std::memcmp(hdr.magic, "ustar", 5) != 0)
      throw Error(ErrorCode::CorruptArchive, "missing ustar magic");

    unsigned recorded = static_cast<unsigned>(parse_octal(hdr.checksum, 8));
    UstarHeader copy = hdr;
    std::memset(copy.checksum, ' ', sizeof(copy.checksum));
    unsigned actual = 0;
    const auto* bytes = reinterpret_cast<const unsigned char*>(&copy);
    for (std::size_t i = 0; i < sizeof(copy); ++i) actual += bytes[i];
    if (recorded != actual)
      throw Error(ErrorCode::CorruptArchive, "header checksum mismatch");

    const auto size = parse_octal(hdr.size, sizeof(hdr.size));
    const std::size_t data_blocks = (size + kBlockSize - 1) / kBlockSize;
    if (pos + kBlockSize + data_blocks * kBlockSize > archive.size())
      throw Error(ErrorCode::CorruptArchive, "truncated entry");
    std::string_view data = archive.substr(pos + kBlockSize, size);

    if (hdr.typeflag == 'x') {
      pending_path = pax_path_override(data);
    } else if (hdr.typeflag == '0' || hdr.typeflag == '\0') {
      std::string path;
      if (!pending_path.empty()) {
        path = pending_path;
        pending_path.clear();
      } else {
        std::string name(hdr.name,
                         strnlen(hdr.name, sizeof(hdr.name)));
        std::string prefix(hdr.prefix,
                           strnlen(hdr.prefix, sizeof(hdr.prefix)));
        path = prefix.empty() ? name : prefix + "/" + name;
      }
      const auto mode = parse_octal(hdr.mode, sizeof(hdr.mode));
      if (!is_safe_relative_path(path))
        throw Error(ErrorCode::CorruptArchive, "unsafe entry path: " + path);
      tree.put(path, std::string(data), (mode & 0100) != 0);
    }
    // Directories and other entry types carry no file payload we keep.

    pos += kBlockSize + data_blocks * kBlockSize;
  }
  return tree;
}

ArchiveVerifyReport verify_archive(std::string_view archive) {
  const PackageTree tree = parse_archive(archive);

  ArchiveVerifyReport report;
  const PackageFile* listing = tree.find(kChecksumPath);
  if (listing == nullptr) {
    report.no_checksum_manifest = true;
    return report;
  }

  std::map<std::string, std::string> listed;
  for (const auto& line : split_lines(listing->content)) {
    if (line.empty()) continue;
    std::size_t sep = line.find("  ");
    if (sep == std::string::npos || sep != 64)
      throw Error(ErrorCode::CorruptArchive, "bad checksum line: " + line);
    listed[line.substr(sep + 2)] = line.substr(0, sep);
  }

  for (const auto& [path, expected] : listed) {
    const PackageFile* file = tree.find(path);
    if (file == nullptr) {
      report.missing_from_archive.push_back(path);
      continue;
    }
    if (sha256_hex(file->content) != expected) report.mismatched.push_back(path);
  }
  for (const auto& [path, file] : tree) {
    (void)file;
    if (path == kChecksumPath) continue;
    if (listed.find(path) == listed.end()) report.unlisted.push_back(path);
  }
  return report;
}

}  // namespace qrep
