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

#ifndef LDEKIT_EXPR_EVAL_H_
#define LDEKIT_EXPR_EVAL_H_

#include "ldekit/expr/ast.h"

namespace ldekit::expr {

// "and"/"or" short-circuit. Integer arithmetic is exact signed 64-bit and
// throws EvalError(kOverflow) instead of wrapping; division truncates toward
// zero and throws EvalError(kDivisionByZero).
Value Evaluate(const Expression& expr, const Environment& env);

// Applies assignments left to right on a copy of env. Evaluation errors are
// rethrown with the index of the failing assignment.
Environment ApplyActions(const ActionList& actions, const Environment& env);

}  // namespace ldekit::expr

#endif  // LDEKIT_EXPR_EVAL_H_
