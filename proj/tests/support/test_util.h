// Copyright 2026 The ldekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LDEKIT_TESTS_SUPPORT_TEST_UTIL_H_
#define LDEKIT_TESTS_SUPPORT_TEST_UTIL_H_

#include <filesystem>
#include <string>

#include "ldekit/graph/graph_model.h"

namespace ldekit::testing {

std::filesystem::path DataPath(const std::string& name);
std::filesystem::path GoldenPath(const std::string& name);
std::string ReadFile(const std::filesystem::path& path);
graph::GraphModel LoadFixture(const std::string& name);
void WriteFile(const std::filesystem::path& path, const std::string& content);

// Runs a shell command, capturing stdout. Returns the exit status.
int RunCommand(const std::string& command, std::string* output);

// Absolute path of the node binary, or empty when it is not installed.
std::string FindNode();

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace ldekit::testing

#endif  // LDEKIT_TESTS_SUPPORT_TEST_UTIL_H_
