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

#include "qrep/package_tree.hpp"

#include "qrep/error.hpp"
#include "qrep/util.hpp"

namespace qrep {

void PackageTree::put(std::string path, std::string content, bool executable) {
  if (!is_safe_relative_path(path))
    throw Error(ErrorCode::InvalidPath, "not a tree-safe relative path: " + path);
  files_[std::move(path)] = PackageFile{std::move(content), executable};
}

bool PackageTree::contains(std::string_view path) const {
  return files_.find(std::string(path)) != files_.end();
}

const PackageFile* PackageTree::find(std::string_view path) const {
  auto it = files_.find(std::string(path));
  return it == files_.end() ? nullptr : &it->second;
}

void PackageTree::erase(std::string_view path) {
  files_.erase(std::string(path));
}

}  // namespace qrep
