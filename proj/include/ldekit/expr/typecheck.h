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

#ifndef LDEKIT_EXPR_TYPECHECK_H_
#define LDEKIT_EXPR_TYPECHECK_H_

#include <optional>
#include <vector>

#include "ldekit/expr/ast.h"
#include "ldekit/graph/issue.h"

namespace ldekit::expr {

struct TypeResult {
  std::optional<Type> type;  // nullopt when issues were found
  std::vector<graph::ValidationIssue> issues;
};

// Rules: arithmetic and ordering take integers; "=" and "!=" take two
// integers or two booleans; "and", "or", "not" take booleans. Issues carry
// rule ids type.mismatch and var.undeclared and no element id.
TypeResult Typecheck(const Expression& expr, const Schema& schema);

// Additionally requires a boolean result (rule guard.type).
std::vector<graph::ValidationIssue> TypecheckGuard(const Expression& expr,
                                                   const Schema& schema);

// Each target must be declared and keep its type.
std::vector<graph::ValidationIssue> TypecheckActions(const ActionList& actions,
                                                     const Schema& schema);

}  // namespace ldekit::expr

#endif  // LDEKIT_EXPR_TYPECHECK_H_
