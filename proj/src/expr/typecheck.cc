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

#include "ldekit/expr/typecheck.h"

namespace ldekit::expr {

namespace {

using graph::MakeError;
using graph::ValidationIssue;

class Checker {
 public:
  explicit Checker(const Schema& schema) : schema_(schema) {}

  std::optional<Type> Check(const Expression& e) {
    return std::visit([&](const auto& n) { return CheckNode(n); }, e.node().v);
  }

  std::vector<ValidationIssue>& issues() { return issues_; }

 private:
  std::optional<Type> CheckNode(const BoolLiteral&) { return Type::kBoolean; }
  std::optional<Type> CheckNode(const IntLiteral&) { return Type::kInteger; }

  std::optional<Type> CheckNode(const VarRef& v) {
    auto it = schema_.find(v.name);
    if (it == schema_.end()) {
      issues_.push_back(
          MakeError("var.undeclared", "undeclared variable '" + v.name + "'"));
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<Type> CheckNode(const UnaryExpr& u) {
    auto t = Check(u.operand);
    Type want = u.op == UnaryOp::kNot ? Type::kBoolean : Type::kInteger;
    if (t && *t != want) {
      Mismatch(std::string("operator '") + std::string(OpText(u.op)) +
               "' expects " + std::string(TypeName(want)) + ", found " +
               std::string(TypeName(*t)));
    }
    return want;
  }

  std::optional<Type> CheckNode(const BinaryExpr& b) {
    auto lt = Check(b.lhs);
    auto rt = Check(b.rhs);
    const std::string op(OpText(b.op));
    switch (b.op) {
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        ExpectOperand(op, lt, Type::kBoolean);
        ExpectOperand(op, rt, Type::kBoolean);
        return Type::kBoolean;
      case BinaryOp::kEq:
      case BinaryOp::kNe:
        if (lt && rt && *lt != *rt) {
          Mismatch("operator '" + op + "' compares " +
                   std::string(TypeName(*lt)) + " with " +
                   std::string(TypeName(*rt)));
        }
        return Type::kBoolean;
      case BinaryOp::kLt:
      case BinaryOp::kLe:
      case BinaryOp::kGt:
      case BinaryOp::kGe:
        ExpectOperand(op, lt, Type::kInteger);
        ExpectOperand(op, rt, Type::kInteger);
        return Type::kBoolean;
      default:
        ExpectOperand(op, lt, Type::kInteger);
        ExpectOperand(op, rt, Type::kInteger);
        return Type::kInteger;
    }
  }

  void ExpectOperand(const std::string& op, std::optional<Type> got, Type want) {
    if (got && *got != want) {
      Mismatch("operator '" + op + "' expects " + std::string(TypeName(want)) +
               " operands, found " + std::string(TypeName(*got)));
    }
  }

  void Mismatch(std::string message) {
    issues_.push_back(MakeError("type.mismatch", std::move(message)));
  }

  const Schema& schema_;
  std::vector<ValidationIssue> issues_;
};

}  // namespace

TypeResult Typecheck(const Expression& expr, const Schema& schema) {
  Checker checker(schema);
  auto type = checker.Check(expr);
  TypeResult result;
  result.issues = std::move(checker.issues());
  if (result.issues.empty()) result.type = type;
  return result;
}

std::vector<graph::ValidationIssue> TypecheckGuard(const Expression& expr,
                                                   const Schema& schema) {
  TypeResult r = Typecheck(expr, schema);
  if (r.type && *r.type != Type::kBoolean) {
    r.issues.push_back(
        MakeError("guard.type", "guard must be boolean, found integer"));
  }
  return r.issues;
}

std::vector<graph::ValidationIssue> TypecheckActions(const ActionList& actions,
                                                     const Schema& schema) {
  std::vector<ValidationIssue> issues;
  for (const auto& a : actions) {
    TypeResult r = Typecheck(a.value, schema);
    issues.insert(issues.end(), r.issues.begin(), r.issues.end());
    auto it = schema.find(a.target);
    if (it == schema.end()) {
      issues.push_back(MakeError(
          "var.undeclared", "assignment to undeclared variable '" + a.target + "'"));
    } else if (r.type && *r.type != it->second) {
      issues.push_back(MakeError(
          "type.mismatch", "cannot assign " + std::string(TypeName(*r.type)) +
                               " to " + std::string(TypeName(it->second)) +
                               " variable '" + a.target + "'"));
    }
  }
  return issues;
}

}  // namespace ldekit::expr
