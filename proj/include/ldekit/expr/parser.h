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

#ifndef LDEKIT_EXPR_PARSER_H_
#define LDEKIT_EXPR_PARSER_H_

#include <string_view>

#include "ldekit/expr/ast.h"

namespace ldekit::expr {

// Grammar (lowest precedence first, left-associative within a level):
//
//   expr    := or
//   or      := and { "or" and }
//   and     := cmp { "and" cmp }
//   cmp     := add { ("=" | "!=" | "<" | "<=" | ">" | ">=") add }
//   add     := mul { ("+" | "-") mul }
//   mul     := unary { ("*" | "/") unary }
//   unary   := ("not" | "-") unary | primary
//   primary := INT | "true" | "false" | IDENT | "(" expr ")"
//
//   actions := [ assign { ";" assign } [ ";" ] ]
//   assign  := IDENT ":=" expr
//
// Throws ParseError with the byte offset and the expected token.
Expression ParseExpression(std::string_view text);
ActionList ParseActions(std::string_view text);

}  // namespace ldekit::expr

#endif  // LDEKIT_EXPR_PARSER_H_
