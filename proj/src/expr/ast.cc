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

#include "ldekit/expr/ast.h"

#include "ldekit/error.h"

namespace ldekit::expr {

std::string_view OpText(UnaryOp op) {
  return op == UnaryOp::kNot ? "not" : "-";
}

std::string_view OpText(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return "or";
    case BinaryOp::kAnd: return "and";
    case BinaryOp::kEq: return "=";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
  }
  return "?";
}

Expression Expression::Bool(bool value) {
  return Expression(std::make_shared<const ExprNode>(ExprNode{BoolLiteral{value}}));
}

Expression Expression::Int(std::int64_t value) {
  return Expression(std::make_shared<const ExprNode>(ExprNode{IntLiteral{value}}));
}

Expression Expression::Var(std::string name) {
  return Expression(
      std::make_shared<const ExprNode>(ExprNode{VarRef{std::move(name)}}));
}

Expression Expression::Unary(UnaryOp op, Expression operand) {
  return Expression(std::make_shared<const ExprNode>(
      ExprNode{UnaryExpr{op, std::move(operand)}}));
}

Expression Expression::Binary(BinaryOp op, Expression lhs, Expression rhs) {
  return Expression(std::make_shared<const ExprNode>(
      ExprNode{BinaryExpr{op, std::move(lhs), std::move(rhs)}}));
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node().v;
  const auto& y = b.node().v;
  if (x.index() != y.index()) return false;
  if (const auto* l = std::get_if<BoolLiteral>(&x)) {
    return l->value == std::get<BoolLiteral>(y).value;
  }
  if (const auto* l = std::get_if<IntLiteral>(&x)) {
    return l->value == std::get<IntLiteral>(y).value;
  }
  if (const auto* v = std::get_if<VarRef>(&x)) {
    return v->name == std::get<VarRef>(y).name;
  }
  if (const auto* u = std::get_if<UnaryExpr>(&x)) {
    const auto& w = std::get<UnaryExpr>(y);
    return u->op == w.op && u->operand == w.operand;
  }
  const auto& p = std::get<BinaryExpr>(x);
  const auto& q = std::get<BinaryExpr>(y);
  return p.op == q.op && p.lhs == q.lhs && p.rhs == q.rhs;
}

std::string_view TypeName(Type type) {
  return type == Type::kBoolean ? "boolean" : "integer";
}

Type TypeOf(const Value& value) {
  return std::holds_alternative<bool>(value) ? Type::kBoolean : Type::kInteger;
}

std::string FormatValue(const Value& value) {
  if (const bool* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  return std::to_string(std::get<std::int64_t>(value));
}

const Value* Environment::Find(std::string_view name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

void Environment::Set(std::string_view name, Value value) {
  auto it = values_.find(name);
  if (it == values_.end()) {
    throw Error(ErrorCode::kUnknownElement,
                "assignment to undeclared variable '" + std::string(name) + "'");
  }
  if (TypeOf(it->second) != TypeOf(value)) {
    throw Error(ErrorCode::kInvalidModel,
                "assignment would change the type of '" + std::string(name) +
                    "'");
  }
  it->second = value;
}

void Environment::Declare(std::string name, Value initial) {
  values_[std::move(name)] = initial;
}

Schema Environment::schema() const {
  Schema s;
  for (const auto& [name, value] : values_) s.emplace(name, TypeOf(value));
  return s;
}

namespace {

int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return 1;
    case BinaryOp::kAnd: return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: return 3;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 4;
    case BinaryOp::kMul:
    case BinaryOp::kDiv: return 5;
  }
  return 0;
}

constexpr int kUnaryPrecedence = 6;
constexpr int kAtomPrecedence = 7;

int Precedence(const Expression& e) {
  if (const auto* b = std::get_if<BinaryExpr>(&e.node().v)) {
    return Precedence(b->op);
  }
  if (std::holds_alternative<UnaryExpr>(e.node().v)) return kUnaryPrecedence;
  if (const auto* i = std::get_if<IntLiteral>(&e.node().v); i && i->value < 0) {
    return kUnaryPrecedence;
  }
  return kAtomPrecedence;
}

void PrintTo(const Expression& e, std::string& out);

void PrintOperand(const Expression& e, bool parens, std::string& out) {
  if (parens) out += '(';
  PrintTo(e, out);
  if (parens) out += ')';
}

void PrintTo(const Expression& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BoolLiteral>) {
          out += n.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, IntLiteral>) {
          out += std::to_string(n.value);
        } else if constexpr (std::is_same_v<T, VarRef>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          out += OpText(n.op);
          if (n.op == UnaryOp::kNot) out += ' ';
          PrintOperand(n.operand, Precedence(n.operand) < kUnaryPrecedence,
                       out);
        } else {
          int p = Precedence(n.op);
          PrintOperand(n.lhs, Precedence(n.lhs) < p, out);
          out += ' ';
          out += OpText(n.op);
          out += ' ';
          PrintOperand(n.rhs, Precedence(n.rhs) <= p, out);
        }
      },
      e.node().v);
}

}  // namespace

std::string Print(const Expression& expr) {
  std::string out;
  PrintTo(expr, out);
  return out;
}

std::string Print(const ActionList& actions) {
  std::string out;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) out += "; ";
    out += actions[i].target;
    out += " := ";
    out += Print(actions[i].value);
  }
  return out;
}

}  // namespace ldekit::expr
