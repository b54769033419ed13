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

#ifndef LDEKIT_GRAPH_ISSUE_H_
#define LDEKIT_GRAPH_ISSUE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ldekit::graph {

// kInfo carries static diagnostics that never block anything, such as guard
// exhaustiveness that cannot be decided statically.
enum class Severity { kError, kWarning, kInfo };

std::string_view SeverityName(Severity severity);

struct ValidationIssue {
  Severity severity = Severity::kError;
  std::string rule_id;
  std::string message;
  std::optional<std::string> element_id;

  friend bool operator==(const ValidationIssue&,
                         const ValidationIssue&) = default;
};

ValidationIssue MakeError(std::string rule_id, std::string message,
                          std::optional<std::string> element_id = {});
ValidationIssue MakeWarning(std::string rule_id, std::string message,
                            std::optional<std::string> element_id = {});
ValidationIssue MakeInfo(std::string rule_id, std::string message,
                         std::optional<std::string> element_id = {});

// Orders by element id (issues without one first), then rule id, then
// message; removes exact duplicates.
void SortIssues(std::vector<ValidationIssue>& issues);

bool HasErrors(const std::vector<ValidationIssue>& issues);

// "<severity> <rule> [<element>]: <message>"
std::string FormatIssue(const ValidationIssue& issue);

}  // namespace ldekit::graph

#endif  // LDEKIT_GRAPH_ISSUE_H_
