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

#include "ldekit/graph/issue.h"

#include <algorithm>
#include <tuple>

namespace ldekit::graph {

std::string_view SeverityName(Severity severity) {
  switch (severity) {
    case Severity::kError: return "error";
    case Severity::kWarning: return "warning";
    case Severity::kInfo: return "info";
  }
  return "";
}

ValidationIssue MakeError(std::string rule_id, std::string message,
                          std::optional<std::string> element_id) {
  return {Severity::kError, std::move(rule_id), std::move(message),
          std::move(element_id)};
}

ValidationIssue MakeWarning(std::string rule_id, std::string message,
                            std::optional<std::string> element_id) {
  return {Severity::kWarning, std::move(rule_id), std::move(message),
          std::move(element_id)};
}

ValidationIssue MakeInfo(std::string rule_id, std::string message,
                         std::optional<std::string> element_id) {
  return {Severity::kInfo, std::move(rule_id), std::move(message),
          std::move(element_id)};
}

void SortIssues(std::vector<ValidationIssue>& issues) {
  auto key = [](const ValidationIssue& i) {
    return std::make_tuple(i.element_id.has_value(),
                           i.element_id.value_or(std::string()),
                           std::cref(i.rule_id), std::cref(i.message),
                           static_cast<int>(i.severity));
  };
  std::sort(issues.begin(), issues.end(),
            [&](const ValidationIssue& a, const ValidationIssue& b) {
              return key(a) < key(b);
            });
  issues.erase(std::unique(issues.begin(), issues.end()), issues.end());
}

bool HasErrors(const std::vector<ValidationIssue>& issues) {
  return std::any_of(issues.begin(), issues.end(), [](const auto& i) {
    return i.severity == Severity::kError;
  });
}

std::string FormatIssue(const ValidationIssue& issue) {
  std::string out(SeverityName(issue.severity));
  out += ' ';
  out += issue.rule_id;
  if (issue.element_id) {
    out += " [";
    out += *issue.element_id;
    out += ']';
  }
  out += ": ";
  out += issue.message;
  return out;
}

}  // namespace ldekit::graph
