// Copyright 2026 The ppbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPBENCH_ERROR_H_
#define PPBENCH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppbench {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kConfig,
  kUnknownCategory,
  kMalformedNumeric,
  kArityMismatch,
  kMissingColumn,
  kEmptyInput,
  kInsufficientRows,
  kNoScoredColumns,
  kDegenerateColumn,
  kNoQidColumns,
  kSchemaMismatch,
  kNoTargetColumn,
  kEmptySplit,
  kMissingLabels,
  kEmptyTrainingSet,
  kInsufficientPopulation,
  kDisjointnessViolation,
  kFoldTooSmall,
  kEmptyResults,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported with this type; the
// code lets callers (and the Python bindings) distinguish them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ppbench

#endif  // PPBENCH_ERROR_H_
