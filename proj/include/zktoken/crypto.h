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

#ifndef ZKTOKEN_CRYPTO_H_
#define ZKTOKEN_CRYPTO_H_

// Concrete instantiations of every hash and signature used by the scheme.
// All multi-input hashes start with a one-byte domain tag; the first five tags
// are the protocol hashes, the rest are artifact-internal.

#include <sodium.h>

#include <cstdint>
#include <vector>

#include "zktoken/bytes.h"
#include "zktoken/random.h"
#include "zktoken/types.h"

namespace zktoken {

namespace tag {
inline constexpr std::uint8_t kToken = 0x01;
inline constexpr std::uint8_t kBind = 0x02;
inline constexpr std::uint8_t kCredential = 0x03;
inline constexpr std::uint8_t kClaims = 0x04;
inline constexpr std::uint8_t kClaim = 0x05;
inline constexpr std::uint8_t kRelation = 0x06;
inline constexpr std::uint8_t kRecord = 0x07;
inline constexpr std::uint8_t kProofKey = 0x08;
inline constexpr std::uint8_t kEscrowId = 0x09;
inline constexpr std::uint8_t kRngStream = 0x0A;
}  // namespace tag

// Initializes libsodium once. Throws kRandomnessUnavailable on failure.
void ensure_crypto_initialized();

class Sha256 {
 public:
  Sha256();
  Sha256& update(ByteView data);
  Sha256& u8(std::uint8_t v);
  Sha256& u32(std::uint32_t v);  // little-endian
  Sha256& u64(std::uint64_t v);  // little-endian
  Digest finish();

 private:
  crypto_hash_sha256_state state_;
};

Digest sha256(ByteView data);
Digest hmac_sha256(ByteView key, ByteView message);

// H(0x01 || seed || LE64(e))
Token hash_token(const Seed& seed, Epoch e);

struct ClaimsDigest {
  Digest digest{};
  std::vector<Digest> per_claim;
};

// H(0x05 || LE32(index) || label || 0x00 || value)
Digest hash_claim(std::uint32_t index, const Claim& claim);
// H(0x04 || per_claim[0] || ... || per_claim[n-1])
Digest hash_claim_digests(std::span<const Digest> per_claim);
ClaimsDigest hash_claims(const Claims& claims);

// H(0x02 || LE32(|challenge|) || challenge || nonce)
Digest hash_bind(ByteView challenge, ByteView nonce);

// H(0x03 || seed || claims_digest || LE64(exp)); the message the issuer signs.
Digest credential_digest(const Seed& seed, const Digest& claims_digest, Epoch exp);

KeyPair keygen(const SecurityParams& params, RandomSource& rng);

// Ed25519 over a 32-byte digest. Throws kInvalidKey for a malformed key.
Bytes sign(ByteView sk, const Digest& message);

// Never throws; malformed keys or signatures yield false.
bool verify(ByteView pk, ByteView sig, const Digest& message);

}  // namespace zktoken

#endif  // ZKTOKEN_CRYPTO_H_
