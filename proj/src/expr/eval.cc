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

#include "ldekit/expr/eval.h"

#include "ldekit/error.h"

namespace ldekit::expr {

namespace {

[[noreturn]] void IllTyped(const std::string& what) {
  throw Error(ErrorCode::kInvalidModel, "ill-typed expression: " + what);
}

bool AsBool(const Value& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  IllTyped("expected boolean");
}

std::int64_t AsInt(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  IllTyped("expected integer");
}

[[noreturn]] void Overflow(std::string_view op) {
  throw EvalError(ErrorCode::kOverflow,
                  "integer overflow in '" + std::string(op) + "'");
}

Value Eval(const Expression& e, const Environment& env);

Value EvalBinary(const BinaryExpr& b, const Environment& env) {
  if (b.op == BinaryOp::kAnd) {
    return AsBool(Eval(b.lhs, env)) && AsBool(Eval(b.rhs, env));
  }
  if (b.op == BinaryOp::kOr) {
    return AsBool(Eval(b.lhs, env)) || AsBool(Eval(b.rhs, env));
  }
  Value lv = Eval(b.lhs, env);
  Value rv = Eval(b.rhs, env);
  if (b.op == BinaryOp::kEq || b.op == BinaryOp::kNe) {
    if (lv.index() != rv.index()) IllTyped("equality on mixed types");
    return (lv == rv) == (b.op == BinaryOp::kEq);
  }
  std::int64_t l = AsInt(lv);
  std::int64_t r = AsInt(rv);
  std::int64_t out = 0;
  switch (b.op) {
    case BinaryOp::kLt: return l < r;
    case BinaryOp::kLe: return l <= r;
    case BinaryOp::kGt: return l > r;
    case BinaryOp::kGe: return l >= r;
    case BinaryOp::kAdd:
      if (__builtin_add_overflow(l, r, &out)) Overflow("+");
      return out;
    case BinaryOp::kSub:
      if (__builtin_sub_overflow(l, r, &out)) Overflow("-");
      return out;
    case BinaryOp::kMul:
      if (__builtin_mul_overflow(l, r, &out)) Overflow("*");
      return out;
    case BinaryOp::kDiv:
      if (r == 0) throw EvalError(ErrorCode::kDivisionByZero, "division by zero");
      if (l == INT64_MIN && r == -1) Overflow("/");
      return l / r;
    default:
      break;
  }
  IllTyped("unknown operator");
}

Value Eval(const Expression& e, const Environment& env) {
  return std::visit(
      [&](const auto& n) -> Value {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BoolLiteral>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, IntLiteral>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          const Value* v = env.Find(n.name);
          if (v == nullptr) {
            throw Error(ErrorCode::kUnknownElement,
                        "undeclared variable '" + n.name + "'");
          }
          return *v;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          Value v = Eval(n.operand, env);
          if (n.op == UnaryOp::kNot) return !AsBool(v);
          std::int64_t i = AsInt(v);
          if (i == INT64_MIN) Overflow("-");
          return -i;
        } else {
          return EvalBinary(n, env);
        }
      },
      e.node().v);
}

}  // namespace

Value Evaluate(const Expression& expr, const Environment& env) {
  return Eval(expr, env);
}

Environment ApplyActions(const ActionList& actions, const Environment& env) {
  Environment out = env;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    Value v;
    try {
      v = Eval(actions[i].value, out);
    } catch (const EvalError& e) {
      throw EvalError(e.code(),
                      std::string(e.what()) + " in assignment " +
                          std::to_string(i) + " ('" + actions[i].target + "')",
                      i);
    }
    out.Set(actions[i].target, v);
  }
  return out;
}

}  // namespace ldekit::expr
