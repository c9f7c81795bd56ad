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

#include <random>

#include "doctest.h"
#include "qrep/error.hpp"
#include "qrep/sha256.hpp"

using namespace qrep;

TEST_CASE("sha256 known answers") {
  // Computed with coreutils sha256sum.
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("base64 RFC 4648 vectors") {
  CHECK(base64_encode("") == "");
  CHECK(base64_encode("f") == "Zg==");
  CHECK(base64_encode("fo") == "Zm8=");
  CHECK(base64_encode("foo") == "Zm9v");
  CHECK(base64_encode("foob") == "Zm9vYg==");
  CHECK(base64_encode("fooba") == "Zm9vYmE=");
  CHECK(base64_encode("foobar") == "Zm9vYmFy");
  CHECK(base64_decode("Zm9vYmFy") == "foobar");
}

TEST_CASE("base64 round-trips arbitrary bytes") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::string bytes;
    const int len = static_cast<int>(rng() % 64);
    for (int k = 0; k < len; ++k)
      bytes += static_cast<char>(rng() & 0xff);
    CHECK(base64_decode(base64_encode(bytes)) == bytes);
  }
}

TEST_CASE("base64 rejects damaged input") {
  CHECK_THROWS_AS(base64_decode("Zg="), Error);
  CHECK_THROWS_AS(base64_decode("Z!=="), Error);
}

TEST_CASE("replace_all") {
  CHECK(replace_all("aaa", "a", "bb") == "bbbbbb");
  CHECK(replace_all("nothing here", "xyz", "_") == "nothing here");
  CHECK(replace_all("secret-secret", "secret", "[x]") == "[x]-[x]");
  CHECK(replace_all("text", "", "y") == "text");
}

TEST_CASE("split_lines") {
  CHECK(split_lines("") == std::vector<std::string>{});
  CHECK(split_lines("a\nb\n") == std::vector<std::string>{"a", "b"});
  CHECK(split_lines("a\n\nb") == std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("safe relative paths") {
  CHECK(is_safe_relative_path("a"));
  CHECK(is_safe_relative_path("a/b/c.txt"));
  CHECK_FALSE(is_safe_relative_path(""));
  CHECK_FALSE(is_safe_relative_path("/etc/passwd"));
  CHECK_FALSE(is_safe_relative_path("a/../b"));
  CHECK_FALSE(is_safe_relative_path(".."));
  CHECK_FALSE(is_safe_relative_path("./a"));
  CHECK_FALSE(is_safe_relative_path("a//b"));
  CHECK_FALSE(is_safe_relative_path("a/"));
}

TEST_CASE("credential scan flags inline assignments") {
  const std::vector<std::string> names = {"QPU_TOKEN"};

  auto leaks = scan_for_credential_leaks("QPU_TOKEN=abc123\n", names);
  REQUIRE(leaks.size() == 1);
  CHECK(leaks[0].line == 1);
  CHECK(leaks[0].credential == "QPU_TOKEN");
  CHECK(leaks[0].reason == "inline assignment");

  CHECK(scan_for_credential_leaks("token: QPU_TOKEN = \"s3cr3tvalue\"", names)
            .size() == 1);
}

TEST_CASE("credential scan flags long tokens next to a name") {
  const std::vector<std::string> names = {"QPU_TOKEN"};
  const std::string line =
      "# QPU_TOKEN was 0123456789abcdef0123456789abcdef01234567 during the "
      "run\n";
  auto leaks = scan_for_credential_leaks(line, names);
  REQUIRE(leaks.size() == 1);
  CHECK(leaks[0].reason == "high-entropy token");
}

TEST_CASE("credential scan ignores benign usage") {
  const std::vector<std::string> names = {"QPU_TOKEN"};
  CHECK(scan_for_credential_leaks("if [ -z \"${QPU_TOKEN:-}\" ]; then\n", names)
            .empty());
  CHECK(scan_for_credential_leaks(
            ": \"${QPU_TOKEN:=\xc2\xabREDACTED\xc2\xbb}\"\n", names)
            .empty());
  CHECK(scan_for_credential_leaks("echo \"QPU_TOKEN is not set\" >&2\n", names)
            .empty());
  CHECK(scan_for_credential_leaks("curl -H \"X-Auth: $QPU_TOKEN\"\n", names)
            .empty());
  CHECK(scan_for_credential_leaks("set QPU_TOKEN in your shell first\n", names)
            .empty());
  // Name embedded in a longer word does not count.
  CHECK(scan_for_credential_leaks("MY_QPU_TOKEN_BACKUP=abcdef12\n", names)
            .empty());
  // No names declared: nothing to scan for.
  CHECK(scan_for_credential_leaks("QPU_TOKEN=abc123\n", {}).empty());
}
