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

#ifndef LDEKIT_EXPR_AST_H_
#define LDEKIT_EXPR_AST_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ldekit::expr {

enum class UnaryOp { kNot, kNegate };

enum class BinaryOp {
  kOr,
  kAnd,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kAdd,
  kSub,
  kMul,
  kDiv,
};

std::string_view OpText(UnaryOp op);
std::string_view OpText(BinaryOp op);

struct ExprNode;

// Immutable handle to a shared expression tree. Copies are cheap.
class Expression {
 public:
  static Expression Bool(bool value);
  static Expression Int(std::int64_t value);
  static Expression Var(std::string name);
  static Expression Unary(UnaryOp op, Expression operand);
  static Expression Binary(BinaryOp op, Expression lhs, Expression rhs);

  const ExprNode& node() const { return *node_; }

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  explicit Expression(std::shared_ptr<const ExprNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const ExprNode> node_;
};

struct BoolLiteral {
  bool value;
};
struct IntLiteral {
  std::int64_t value;
};
struct VarRef {
  std::string name;
};
struct UnaryExpr {
  UnaryOp op;
  Expression operand;
};
struct BinaryExpr {
  BinaryOp op;
  Expression lhs;
  Expression rhs;
};

struct ExprNode {
  std::variant<BoolLiteral, IntLiteral, VarRef, UnaryExpr, BinaryExpr> v;
};

struct Assignment {
  std::string target;
  Expression value;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

using ActionList = std::vector<Assignment>;

enum class Type { kBoolean, kInteger };

std::string_view TypeName(Type type);

using Value = std::variant<bool, std::int64_t>;

Type TypeOf(const Value& value);
std::string FormatValue(const Value& value);

using Schema = std::map<std::string, Type, std::less<>>;

// Variable valuation. Each variable keeps the tag it was declared with.
class Environment {
 public:
  Environment() = default;
  explicit Environment(std::map<std::string, Value, std::less<>> values)
      : values_(std::move(values)) {}

  const Value* Find(std::string_view name) const;
  // Throws ldekit::Error if the variable is unknown or the tag would change.
  void Set(std::string_view name, Value value);
  void Declare(std::string name, Value initial);

  Schema schema() const;
  const std::map<std::string, Value, std::less<>>& values() const {
    return values_;
  }

  friend bool operator==(const Environment&, const Environment&) = default;

 private:
  std::map<std::string, Value, std::less<>> values_;
};

// Prints with the minimum parentheses needed so that parsing the output
// yields the same tree.
std::string Print(const Expression& expr);
std::string Print(const ActionList& actions);

}  // namespace ldekit::expr

#endif  // LDEKIT_EXPR_AST_H_
