//
// Copyright 2026 The VForge Authors
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
//

#include "vforge/error.h"

namespace vforge {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kBadWeights: return "BadWeights";
    case ErrorCode::kModelFormat: return "ModelFormat";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kInsufficientNegations: return "InsufficientNegations";
    case ErrorCode::kNoEligiblePositions: return "NoEligiblePositions";
    case ErrorCode::kIneligiblePosition: return "IneligiblePosition";
    case ErrorCode::kInsufficientCandidates: return "InsufficientCandidates";
    case ErrorCode::kEmptyQuestion: return "EmptyQuestion";
    case ErrorCode::kEmptyGeneration: return "EmptyGeneration";
    case ErrorCode::kTooFewSentences: return "TooFewSentences";
    case ErrorCode::kArticleTooShort: return "ArticleTooShort";
    case ErrorCode::kGeneratorUnavailable: return "GeneratorUnavailable";
    case ErrorCode::kGeneratorEmpty: return "GeneratorEmpty";
    case ErrorCode::kTargetUnreachable: return "TargetUnreachable";
    case ErrorCode::kZeroLength: return "ZeroLength";
    case ErrorCode::kRealTooShort: return "RealTooShort";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kSingleClass: return "SingleClass";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kTransport: return "Transport";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kUnknownAnnotator: return "UnknownAnnotator";
    case ErrorCode::kUnknownTask: return "UnknownTask";
    case ErrorCode::kDuplicateSubmission: return "DuplicateSubmission";
    case ErrorCode::kBadVerdict: return "BadVerdict";
    case ErrorCode::kNoOverlap: return "NoOverlap";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::int64_t detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(detail) {}

}  // namespace vforge
