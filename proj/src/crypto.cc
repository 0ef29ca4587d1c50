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

#include "zktoken/crypto.h"

#include <algorithm>

#include "zktoken/error.h"

namespace zktoken {

void ensure_crypto_initialized() {
  static const int status = sodium_init();
  if (status < 0) {
    throw Error(ErrorCode::kRandomnessUnavailable, "libsodium init failed");
  }
}

Sha256::Sha256() { crypto_hash_sha256_init(&state_); }

Sha256& Sha256::update(ByteView data) {
  crypto_hash_sha256_update(&state_, data.data(), data.size());
  return *this;
}

Sha256& Sha256::u8(std::uint8_t v) { return update(ByteView(&v, 1)); }

Sha256& Sha256::u32(std::uint32_t v) {
  std::uint8_t b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
  return update(b);
}

Sha256& Sha256::u64(std::uint64_t v) {
  std::uint8_t b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
  return update(b);
}

Digest Sha256::finish() {
  Digest d;
  crypto_hash_sha256_final(&state_, d.data());
  return d;
}

Digest sha256(ByteView data) { return Sha256().update(data).finish(); }

Digest hmac_sha256(ByteView key, ByteView message) {
  crypto_auth_hmacsha256_state st;
  crypto_auth_hmacsha256_init(&st, key.data(), key.size());
  crypto_auth_hmacsha256_update(&st, message.data(), message.size());
  Digest d;
  crypto_auth_hmacsha256_final(&st, d.data());
  return d;
}

Token hash_token(const Seed& seed, Epoch e) {
  return Token{Sha256().u8(tag::kToken).update(seed.bytes()).u64(e.value).finish()};
}

Digest hash_claim(std::uint32_t index, const Claim& claim) {
  return Sha256()
      .u8(tag::kClaim)
      .u32(index)
      .update(as_bytes(claim.label))
      .u8(0x00)
      .update(claim.value)
      .finish();
}

Digest hash_claim_digests(std::span<const Digest> per_claim) {
  Sha256 h;
  h.u8(tag::kClaims);
  for (const Digest& d : per_claim) h.update(d);
  return h.finish();
}

ClaimsDigest hash_claims(const Claims& claims) {
  ClaimsDigest out;
  out.per_claim.reserve(claims.size());
  for (std::size_t j = 0; j < claims.size(); ++j) {
    out.per_claim.push_back(hash_claim(static_cast<std::uint32_t>(j), claims[j]));
  }
  out.digest = hash_claim_digests(out.per_claim);
  return out;
}

Digest hash_bind(ByteView challenge, ByteView nonce) {
  return Sha256()
      .u8(tag::kBind)
      .u32(static_cast<std::uint32_t>(challenge.size()))
      .update(challenge)
      .update(nonce)
      .finish();
}

Digest credential_digest(const Seed& seed, const Digest& claims_digest, Epoch exp) {
  return Sha256()
      .u8(tag::kCredential)
      .update(seed.bytes())
      .update(claims_digest)
      .u64(exp.value)
      .finish();
}

KeyPair keygen(const SecurityParams& params, RandomSource& rng) {
  params.validate();
  ensure_crypto_initialized();
  Bytes key_seed = rng.bytes(crypto_sign_SEEDBYTES);
  KeyPair kp;
  kp.pk.resize(crypto_sign_PUBLICKEYBYTES);
  kp.sk.resize(crypto_sign_SECRETKEYBYTES);
  crypto_sign_seed_keypair(kp.pk.data(), kp.sk.data(), key_seed.data());
  sodium_memzero(key_seed.data(), key_seed.size());
  return kp;
}

Bytes sign(ByteView sk, const Digest& message) {
  ensure_crypto_initialized();
  if (sk.size() != crypto_sign_SECRETKEYBYTES) {
    throw Error(ErrorCode::kInvalidKey, "signing key has wrong length");
  }
  // The trailing half of an Ed25519 secret key is its public key; reject keys
  // whose halves disagree.
  unsigned char pk[crypto_sign_PUBLICKEYBYTES];
  unsigned char full[crypto_sign_SECRETKEYBYTES];
  crypto_sign_seed_keypair(pk, full, sk.data());
  bool consistent = std::equal(pk, pk + sizeof pk, sk.begin() + crypto_sign_SEEDBYTES);
  sodium_memzero(full, sizeof full);
  if (!consistent) {
    throw Error(ErrorCode::kInvalidKey, "signing key is inconsistent");
  }
  Bytes sig(crypto_sign_BYTES);
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), sk.data());
  return sig;
}

bool verify(ByteView pk, ByteView sig, const Digest& message) {
  ensure_crypto_initialized();
  if (pk.size() != crypto_sign_PUBLICKEYBYTES || sig.size() != crypto_sign_BYTES) {
    return false;
  }
  return crypto_sign_verify_detached(sig.data(), message.data(), message.size(),
                                     pk.data()) == 0;
}

}  // namespace zktoken
