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

#include "ldekit/error.h"

namespace ldekit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kEnvelope: return "EnvelopeError";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kContainmentCycle: return "ContainmentCycle";
    case ErrorCode::kMetamodelMismatch: return "MetamodelMismatch";
    case ErrorCode::kCycle: return "CycleError";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kUnknownTrigger: return "UnknownTrigger";
    case ErrorCode::kStuckAtDecision: return "StuckAtDecision";
    case ErrorCode::kNonterminatingCompletion:
      return "NonterminatingCompletion";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kWrongScreen: return "WrongScreen";
    case ErrorCode::kUnknownProposition: return "UnknownProposition";
    case ErrorCode::kMissingAsset: return "MissingAsset";
    case ErrorCode::kAnnotation: return "AnnotationError";
    case ErrorCode::kUnknownSignature: return "UnknownSignature";
    case ErrorCode::kUnknownSubmodel: return "UnknownSubmodel";
    case ErrorCode::kTargetSetMismatch: return "TargetSetMismatch";
    case ErrorCode::kStageNameArity: return "StageNameArity";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

}  // namespace ldekit
