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

#ifndef LDEKIT_ERROR_H_
#define LDEKIT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ldekit {

enum class ErrorCode {
  // graph-core
  kSyntax,
  kEnvelope,
  kDanglingReference,
  kDuplicateId,
  kContainmentCycle,
  kMetamodelMismatch,
  kCycle,
  // expr
  kParse,
  kDivisionByZero,
  kOverflow,
  // statechart
  kInvalidModel,
  kUnknownTrigger,
  kStuckAtDecision,
  kNonterminatingCompletion,
  // webstory
  kUnknownElement,
  kWrongScreen,
  kUnknownProposition,
  kMissingAsset,
  // dataflow
  kAnnotation,
  kUnknownSignature,
  kUnknownSubmodel,
  // rig
  kTargetSetMismatch,
  kStageNameArity,
  // io
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base of every error raised by the toolkit. Validation problems are
// returned as issues and never thrown.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by topological ordering; the witness lists the nodes of one cycle in
// edge order, the last node connecting back to the first.
class CycleError : public Error {
 public:
  CycleError(std::vector<std::string> witness, const std::string& message)
      : Error(ErrorCode::kCycle, message), witness_(std::move(witness)) {}

  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected,
             const std::string& message)
      : Error(ErrorCode::kParse, message),
        position_(position),
        expected_(std::move(expected)) {}

  // Byte offset into the parsed text.
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Division by zero or signed overflow. For action lists, assignment_index
// names the failing assignment; it is npos for plain expressions.
class EvalError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  EvalError(ErrorCode code, const std::string& message,
            std::size_t assignment_index = npos)
      : Error(code, message), assignment_index_(assignment_index) {}

  std::size_t assignment_index() const { return assignment_index_; }

 private:
  std::size_t assignment_index_;
};

class AnnotationError : public Error {
 public:
  AnnotationError(std::size_t line, std::string rule,
                  const std::string& message)
      : Error(ErrorCode::kAnnotation, message),
        line_(line),
        rule_(std::move(rule)) {}

  std::size_t line() const { return line_; }
  const std::string& rule() const { return rule_; }

 private:
  std::size_t line_;
  std::string rule_;
};

}  // namespace ldekit

#endif  // LDEKIT_ERROR_H_
