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

namespace qrep {

struct PackageFile {
  std::string content;
  bool executable = false;

  bool operator==(const PackageFile&) const = default;
};

/// In-memory package image: relative path -> file. std::map keeps entries in
/// lexicographic byte order, which is the order every consumer (archiving,
/// checksumming, materialization) iterates in.
class PackageTree {
 public:
  using Map = std::map<std::string, PackageFile>;

  /// Inserts or replaces a file. Throws Error{InvalidPath} unless the path is
  /// tree-safe (relative, no "." / ".." segments, no empty segments).
  void put(std::string path, std::string content, bool executable = false);

  bool contains(std::string_view path) const;
  const PackageFile* find(std::string_view path) const;
  void erase(std::string_view path);

  std::size_t size() const { return files_.size(); }
  bool empty() const { return files_.empty(); }

  Map::const_iterator begin() const { return files_.begin(); }
  Map::const_iterator end() const { return files_.end(); }

  bool operator==(const PackageTree&) const = default;

 private:
  Map files_;
};

}  // namespace qrep
