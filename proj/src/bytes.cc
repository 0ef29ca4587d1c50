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

#include "zktoken/bytes.h"

#include <sodium.h>

#include "zktoken/error.h"

namespace zktoken {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMalformedEncoding: return "MalformedEncoding";
    case ErrorCode::kRandomnessUnavailable: return "RandomnessUnavailable";
    case ErrorCode::kInvalidKey: return "InvalidKey";
    case ErrorCode::kUnsupportedConfig: return "UnsupportedConfig";
    case ErrorCode::kEmptyBlock: return "EmptyBlock";
    case ErrorCode::kRelationUnsatisfied: return "RelationUnsatisfied";
    case ErrorCode::kCrsMismatch: return "CrsMismatch";
    case ErrorCode::kExpInPast: return "ExpInPast";
    case ErrorCode::kForeignCredential: return "ForeignCredential";
    case ErrorCode::kClockBeforeGenesis: return "ClockBeforeGenesis";
    case ErrorCode::kBlacklistEpochMismatch: return "BlacklistEpochMismatch";
    case ErrorCode::kSessionExpired: return "SessionExpired";
    case ErrorCode::kBadSignature: return "BadSignature";
    case ErrorCode::kEpochRegression: return "EpochRegression";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kNoValidCredential: return "NoValidCredential";
    case ErrorCode::kAdversaryProtocolViolation: return "AdversaryProtocolViolation";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

std::string to_hex(ByteView bytes) {
  std::string out(bytes.size() * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), bytes.data(), bytes.size());
  out.pop_back();
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "odd-length hex string");
  }
  Bytes out(hex.size() / 2);
  std::size_t written = 0;
  const char* end = nullptr;
  if (sodium_hex2bin(out.data(), out.size(), hex.data(), hex.size(), nullptr,
                     &written, &end) != 0 ||
      written != out.size() || end != hex.data() + hex.size()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid hex string");
  }
  return out;
}

Digest digest_from_hex(std::string_view hex) {
  Bytes b = from_hex(hex);
  if (b.size() != kDigestSize) {
    throw Error(ErrorCode::kInvalidArgument, "digest must be 32 bytes");
  }
  Digest d;
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

}  // namespace zktoken
