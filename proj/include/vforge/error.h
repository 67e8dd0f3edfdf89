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

#ifndef VFORGE_ERROR_H_
#define VFORGE_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vforge {

enum class ErrorCode {
  // text_core
  kEmptyDocument,
  // lm_scorer
  kEmptyCorpus,
  kBadWeights,
  kModelFormat,
  kVersionMismatch,
  // negation_attack
  kBadConfig,
  kInsufficientNegations,
  kNoEligiblePositions,
  kIneligiblePosition,
  kInsufficientCandidates,
  // extension_attack
  kEmptyQuestion,
  kEmptyGeneration,
  kTooFewSentences,
  kArticleTooShort,
  kGeneratorUnavailable,
  kGeneratorEmpty,
  kTargetUnreachable,
  kZeroLength,
  kRealTooShort,
  // dataset
  kDuplicateId,
  kInvariantViolation,
  kEmptyDataset,
  kIo,
  kSchema,
  // eval_harness
  kLengthMismatch,
  kEmpty,
  kSingleClass,
  kOutOfRange,
  // external_adapters
  kTransport,
  kTimeout,
  kMalformedResponse,
  kBadProbability,
  // annotation_service
  kUnknownAnnotator,
  kUnknownTask,
  kDuplicateSubmission,
  kBadVerdict,
  kNoOverlap,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure in the library is reported as an Error. `detail` carries the
// one integer some codes need: the available negation count for
// kInsufficientNegations, the 1-based line for kSchema, the HTTP status for
// kTransport (0 when the connection itself failed).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::int64_t detail = 0);

  ErrorCode code() const { return code_; }
  std::int64_t detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::int64_t detail_;
};

}  // namespace vforge

#endif  // VFORGE_ERROR_H_
