// Copyright 2026 The zkToken Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZKTOKEN_ERROR_H_
#define ZKTOKEN_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace zktoken {

enum class ErrorCode {
  kInvalidArgument,
  kMalformedEncoding,
  kRandomnessUnavailable,
  kInvalidKey,
  kUnsupportedConfig,
  kEmptyBlock,
  kRelationUnsatisfied,
  kCrsMismatch,
  kExpInPast,
  kForeignCredential,
  kClockBeforeGenesis,
  kBlacklistEpochMismatch,
  kSessionExpired,
  kBadSignature,
  kEpochRegression,
  kNotFound,
  kNoValidCredential,
  kAdversaryProtocolViolation,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// The single exception type thrown by the library. Callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zktoken

#endif  // ZKTOKEN_ERROR_H_
