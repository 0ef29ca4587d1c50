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

#include "zktoken/types.h"

#include <algorithm>

#include "zktoken/error.h"

namespace zktoken {
namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t j = 1; j < len; ++j) {
      auto cc = static_cast<unsigned char>(s[i + j]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

}  // namespace

std::string_view hash_name(HashId id) {
  switch (id) {
    case HashId::kSha256: return "sha256";
  }
  return "unknown";
}

std::string_view sig_name(SigId id) {
  switch (id) {
    case SigId::kEd25519: return "ed25519";
  }
  return "unknown";
}

std::string_view backend_name(BackendId id) {
  switch (id) {
    case BackendId::kRelationCheck: return "relation-check";
    case BackendId::kSnark: return "snark";
  }
  return "unknown";
}

void SecurityParams::validate() const {
  if (lambda < 128 || lambda % 8 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda must be >= 128 and a multiple of 8");
  }
  if (hash_id != HashId::kSha256) {
    throw Error(ErrorCode::kUnsupportedConfig, "unsupported hash");
  }
  if (sig_id != SigId::kEd25519) {
    throw Error(ErrorCode::kUnsupportedConfig, "unsupported signature scheme");
  }
}

void EpochParams::validate() const {
  if (dur <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "epoch duration must be positive");
  }
  if (ts0 < 0) {
    throw Error(ErrorCode::kInvalidArgument, "ts0 must be non-negative");
  }
}

Seed::Seed(Bytes bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() < kMinSize) {
    throw Error(ErrorCode::kInvalidArgument, "seed shorter than 128 bits");
  }
}

void validate_claim_label(std::string_view label) {
  if (label.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty claim label");
  }
  if (label.find('\0') != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, "claim label contains NUL");
  }
  if (!valid_utf8(label)) {
    throw Error(ErrorCode::kInvalidArgument, "claim label is not UTF-8");
  }
}

void Claims::add(std::string label, Bytes value) {
  validate_claim_label(label);
  if (index_of(label)) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate claim label: " + label);
  }
  entries_.push_back(Claim{std::move(label), std::move(value)});
}

std::optional<std::size_t> Claims::index_of(std::string_view label) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Claim& c) { return c.label == label; });
  if (it == entries_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

}  // namespace zktoken
