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

#ifndef ZKTOKEN_TYPES_H_
#define ZKTOKEN_TYPES_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zktoken/bytes.h"

namespace zktoken {

enum class HashId : std::uint8_t { kSha256 = 1 };
enum class SigId : std::uint8_t { kEd25519 = 1 };

std::string_view hash_name(HashId id);
std::string_view sig_name(SigId id);

struct SecurityParams {
  std::uint32_t lambda = 256;  // bits
  HashId hash_id = HashId::kSha256;
  SigId sig_id = SigId::kEd25519;

  std::size_t seed_bytes() const { return lambda / 8; }
  void validate() const;

  bool operator==(const SecurityParams&) const = default;
};

// Epoch timing as published by an issuer. Timestamps are seconds since the
// Unix epoch.
struct EpochParams {
  std::int64_t ts0 = 0;
  std::int64_t dur = 86400;

  void validate() const;

  bool operator==(const EpochParams&) const = default;
};

struct Epoch {
  std::uint64_t value = 0;

  constexpr Epoch() = default;
  constexpr explicit Epoch(std::uint64_t v) : value(v) {}

  constexpr auto operator<=>(const Epoch&) const = default;
  constexpr Epoch operator+(std::uint64_t n) const { return Epoch{value + n}; }
  constexpr Epoch operator-(std::uint64_t n) const { return Epoch{value - n}; }
};

class Seed {
 public:
  static constexpr std::size_t kMinSize = 16;

  Seed() = default;
  // Throws kInvalidArgument when shorter than 128 bits.
  explicit Seed(Bytes bytes);

  ByteView bytes() const { return bytes_; }
  std::size_t size() const { return bytes_.size(); }
  bool empty() const { return bytes_.empty(); }

  auto operator<=>(const Seed&) const = default;
  bool operator==(const Seed&) const = default;

 private:
  Bytes bytes_;
};

struct Token {
  Digest bytes{};

  auto operator<=>(const Token&) const = default;
  bool operator==(const Token&) const = default;
};

struct Claim {
  std::string label;
  Bytes value;

  bool operator==(const Claim&) const = default;
};

// Claims in issuance order. Labels are unique, non-empty valid UTF-8 without
// NUL bytes (the per-claim digest uses 0x00 as the label terminator).
class Claims {
 public:
  Claims() = default;

  void add(std::string label, Bytes value);
  void add(std::string label, std::string_view value) {
    add(std::move(label), to_bytes(value));
  }

  const std::vector<Claim>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Claim& operator[](std::size_t i) const { return entries_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const Claims&) const = default;

 private:
  std::vector<Claim> entries_;
};

// Checks the label rules used by Claims::add without mutating anything.
void validate_claim_label(std::string_view label);

struct Credential {
  Seed seed;
  Claims claims;
  Epoch exp;  // last epoch of validity, inclusive
  Bytes sig;

  bool operator==(const Credential&) const = default;
};

enum class BackendId : std::uint8_t { kRelationCheck = 1, kSnark = 2 };

std::string_view backend_name(BackendId id);

struct CommonReferenceString {
  BackendId backend = BackendId::kRelationCheck;
  Digest relation_digest{};
  Bytes params;

  bool operator==(const CommonReferenceString&) const = default;
};

struct Proof {
  BackendId backend = BackendId::kRelationCheck;
  Bytes bytes;

  bool operator==(const Proof&) const = default;
};

struct DisclosedClaim {
  std::uint32_t index = 0;
  Claim claim;

  bool operator==(const DisclosedClaim&) const = default;
};

struct Presentation {
  std::vector<Token> tokens;
  std::vector<Epoch> epochs;
  std::uint32_t m = 0;
  Digest h{};
  std::vector<DisclosedClaim> disclosed;
  std::vector<Digest> claim_digests;
  Epoch exp;
  std::vector<Proof> proofs;

  bool operator==(const Presentation&) const = default;
};

struct Blacklist {
  Epoch epoch;
  std::set<Token> tokens;

  bool contains(const Token& t) const { return tokens.count(t) != 0; }
  bool operator==(const Blacklist&) const = default;
};

// Revoked, not yet expired seeds with their expiration epochs.
struct RevList {
  std::map<Seed, Epoch> entries;

  bool contains(const Seed& s) const { return entries.count(s) != 0; }
  std::size_t size() const { return entries.size(); }
  bool operator==(const RevList&) const = default;
};

struct KeyPair {
  Bytes sk;
  Bytes pk;

  bool operator==(const KeyPair&) const = default;
};

}  // namespace zktoken

template <>
struct std::hash<zktoken::Token> {
  std::size_t operator()(const zktoken::Token& t) const noexcept {
    std::size_t h = 0;
    for (int i = 0; i < 8; ++i) h = (h << 8) | t.bytes[i];
    return h;
  }
};

#endif  // ZKTOKEN_TYPES_H_
