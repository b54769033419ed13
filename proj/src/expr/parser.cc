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

#include "ldekit/expr/parser.h"

#include <cctype>
#include <charconv>
#include <optional>

#include "ldekit/error.h"

namespace ldekit::expr {

namespace {

enum class Tok {
  kEnd,
  kInt,
  kIdent,
  kTrue,
  kFalse,
  kAnd,
  kOr,
  kNot,
  kLParen,
  kRParen,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kAssign,
  kSemicolon,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token Next() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::kEnd, {}, start};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      return {Tok::kInt, src_.substr(start, pos_ - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view word = src_.substr(start, pos_ - start);
      Tok kind = Tok::kIdent;
      if (word == "true") kind = Tok::kTrue;
      else if (word == "false") kind = Tok::kFalse;
      else if (word == "and") kind = Tok::kAnd;
      else if (word == "or") kind = Tok::kOr;
      else if (word == "not") kind = Tok::kNot;
      return {kind, word, start};
    }
    auto two = src_.substr(pos_, 2);
    auto sym = [&](Tok kind, std::size_t len) {
      pos_ += len;
      return Token{kind, src_.substr(start, len), start};
    };
    if (two == "!=") return sym(Tok::kNe, 2);
    if (two == "<=") return sym(Tok::kLe, 2);
    if (two == ">=") return sym(Tok::kGe, 2);
    if (two == ":=") return sym(Tok::kAssign, 2);
    switch (c) {
      case '(': return sym(Tok::kLParen, 1);
      case ')': return sym(Tok::kRParen, 1);
      case '+': return sym(Tok::kPlus, 1);
      case '-': return sym(Tok::kMinus, 1);
      case '*': return sym(Tok::kStar, 1);
      case '/': return sym(Tok::kSlash, 1);
      case '=': return sym(Tok::kEq, 1);
      case '<': return sym(Tok::kLt, 1);
      case '>': return sym(Tok::kGt, 1);
      case ';': return sym(Tok::kSemicolon, 1);
      default: break;
    }
    throw ParseError(start, "token",
                     "unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(start));
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { Advance(); }

  Expression ParseFullExpression() {
    Expression e = ParseOr();
    Expect(Tok::kEnd, "end of input");
    return e;
  }

  ActionList ParseFullActions() {
    ActionList actions;
    while (cur_.kind != Tok::kEnd) {
      if (cur_.kind != Tok::kIdent) Fail("variable name");
      std::string target(cur_.text);
      Advance();
      Expect(Tok::kAssign, "':='");
      actions.push_back({std::move(target), ParseOr()});
      if (cur_.kind == Tok::kSemicolon) {
        Advance();
      } else if (cur_.kind != Tok::kEnd) {
        Fail("';' or end of input");
      }
    }
    return actions;
  }

 private:
  void Advance() { cur_ = lexer_.Next(); }

  [[noreturn]] void Fail(const std::string& expected) {
    std::string found =
        cur_.kind == Tok::kEnd ? "end of input" : "'" + std::string(cur_.text) + "'";
    throw ParseError(cur_.pos, expected,
                     "expected " + expected + " at position " +
                         std::to_string(cur_.pos) + ", found " + found);
  }

  void Expect(Tok kind, const std::string& expected) {
    if (cur_.kind != kind) Fail(expected);
    Advance();
  }

  std::optional<BinaryOp> Match(std::initializer_list<std::pair<Tok, BinaryOp>> ops) {
    for (const auto& [tok, op] : ops) {
      if (cur_.kind == tok) {
        Advance();
        return op;
      }
    }
    return std::nullopt;
  }

  Expression ParseOr() {
    Expression lhs = ParseAnd();
    while (cur_.kind == Tok::kOr) {
      Advance();
      lhs = Expression::Binary(BinaryOp::kOr, lhs, ParseAnd());
    }
    return lhs;
  }

  Expression ParseAnd() {
    Expression lhs = ParseComparison();
    while (cur_.kind == Tok::kAnd) {
      Advance();
      lhs = Expression::Binary(BinaryOp::kAnd, lhs, ParseComparison());
    }
    return lhs;
  }

  Expression ParseComparison() {
    Expression lhs = ParseAdditive();
    while (auto op = Match({{Tok::kEq, BinaryOp::kEq},
                            {Tok::kNe, BinaryOp::kNe},
                            {Tok::kLt, BinaryOp::kLt},
                            {Tok::kLe, BinaryOp::kLe},
                            {Tok::kGt, BinaryOp::kGt},
                            {Tok::kGe, BinaryOp::kGe}})) {
      lhs = Expression::Binary(*op, lhs, ParseAdditive());
    }
    return lhs;
  }

  Expression ParseAdditive() {
    Expression lhs = ParseMultiplicative();
    while (auto op = Match({{Tok::kPlus, BinaryOp::kAdd},
                            {Tok::kMinus, BinaryOp::kSub}})) {
      lhs = Expression::Binary(*op, lhs, ParseMultiplicative());
    }
    return lhs;
  }

  Expression ParseMultiplicative() {
    Expression lhs = ParseUnary();
    while (auto op = Match({{Tok::kStar, BinaryOp::kMul},
                            {Tok::kSlash, BinaryOp::kDiv}})) {
      lhs = Expression::Binary(*op, lhs, ParseUnary());
    }
    return lhs;
  }

  Expression ParseUnary() {
    if (cur_.kind == Tok::kNot) {
      Advance();
      return Expression::Unary(UnaryOp::kNot, ParseUnary());
    }
    if (cur_.kind == Tok::kMinus) {
      Advance();
      return Expression::Unary(UnaryOp::kNegate, ParseUnary());
    }
    return ParsePrimary();
  }

  Expression ParsePrimary() {
    switch (cur_.kind) {
      case Tok::kInt: {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(cur_.text.data(),
                                         cur_.text.data() + cur_.text.size(),
                                         value);
        if (ec != std::errc()) {
          throw ParseError(cur_.pos, "integer literal",
                           "integer literal '" + std::string(cur_.text) +
                               "' out of range at position " +
                               std::to_string(cur_.pos));
        }
        Advance();
        return Expression::Int(value);
      }
      case Tok::kTrue:
        Advance();
        return Expression::Bool(true);
      case Tok::kFalse:
        Advance();
        return Expression::Bool(false);
      case Tok::kIdent: {
        std::string name(cur_.text);
        Advance();
        return Expression::Var(std::move(name));
      }
      case Tok::kLParen: {
        Advance();
        Expression inner = ParseOr();
        Expect(Tok::kRParen, "')'");
        return inner;
      }
      default:
        Fail("expression");
    }
  }

  Lexer lexer_;
  Token cur_{Tok::kEnd, {}, 0};
};

}  // namespace

Expression ParseExpression(std::string_view text) {
  return Parser(text).ParseFullExpression();
}

ActionList ParseActions(std::string_view text) {
  return Parser(text).ParseFullActions();
}

}  // namespace ldekit::expr
