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

#include <gtest/gtest.h>
#include <openssl/evp.h>

#include "test_util.h"
#include "zktoken/error.h"

namespace zktoken {
namespace {

using testing::hex_field;
using testing::read_vectors;

std::uint64_t dec(const std::string& s) { return std::stoull(s); }

Bytes openssl_sha256(const std::vector<ByteView>& parts) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (ByteView p : parts) EVP_DigestUpdate(ctx, p.data(), p.size());
  Bytes out(EVP_MAX_MD_SIZE);
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, out.data(), &len);
  EVP_MD_CTX_free(ctx);
  out.resize(len);
  return out;
}

TEST(CryptoVectors, Sha256) {
  auto lines = read_vectors("sha256.txt");
  ASSERT_GE(lines.size(), 10u);
  for (const auto& v : lines) {
    EXPECT_EQ(to_hex(sha256(hex_field(v.in[0]))), v.out[0]);
  }
}

TEST(CryptoVectors, Sha256Incremental) {
  for (const auto& v : read_vectors("sha256.txt")) {
    Bytes msg = hex_field(v.in[0]);
    Sha256 h;
    for (std::size_t i = 0; i < msg.size(); i += 7) {
      h.update(ByteView(msg).subspan(i, std::min<std::size_t>(7, msg.size() - i)));
    }
    EXPECT_EQ(to_hex(h.finish()), v.out[0]);
  }
}

TEST(CryptoVectors, HmacSha256) {
  auto lines = read_vectors("hmac_sha256.txt");
  ASSERT_GE(lines.size(), 3u);
  // First published HMAC-SHA256 test case, kept literal as a second anchor.
  EXPECT_EQ(lines[0].out[0], "b0344c61d8db38535ca8afceaf0bf12b881dc200c9833da726e9376c2e32cff7");
  for (const auto& v : lines) {
    EXPECT_EQ(to_hex(hmac_sha256(from_hex(v.in[0]), from_hex(v.in[1]))), v.out[0]);
  }
}

TEST(CryptoVectors, Token) {
  auto lines = read_vectors("token.txt");
  ASSERT_GE(lines.size(), 20u);
  for (const auto& v : lines) {
    Token t = hash_token(Seed(from_hex(v.in[0])), Epoch{dec(v.in[1])});
    EXPECT_EQ(to_hex(t.bytes), v.out[0]);
  }
}

TEST(CryptoVectors, Bind) {
  for (const auto& v : read_vectors("bind.txt")) {
    EXPECT_EQ(to_hex(hash_bind(from_hex(v.in[0]), from_hex(v.in[1]))), v.out[0]);
  }
}

TEST(CryptoVectors, Claim) {
  for (const auto& v : read_vectors("claim.txt")) {
    Bytes label = from_hex(v.in[1]);
    Claim c{std::string(label.begin(), label.end()), hex_field(v.in[2])};
    EXPECT_EQ(to_hex(hash_claim(static_cast<std::uint32_t>(dec(v.in[0])), c)), v.out[0]);
  }
}

TEST(CryptoVectors, Claims) {
  auto lines = read_vectors("claims.txt");
  ASSERT_EQ(lines.size(), 4u);
  for (const auto& v : lines) {
    Claims claims;
    std::size_t n = dec(v.in[0]);
    ASSERT_EQ(v.in.size(), 1 + 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      Bytes label = from_hex(v.in[1 + 2 * i]);
      claims.add(std::string(label.begin(), label.end()), from_hex(v.in[2 + 2 * i]));
    }
    ClaimsDigest d = hash_claims(claims);
    EXPECT_EQ(to_hex(d.digest), v.out[0]);
    EXPECT_EQ(d.per_claim.size(), n);
    EXPECT_EQ(hash_claim_digests(d.per_claim), d.digest);
  }
}

TEST(CryptoVectors, CredentialDigest) {
  for (const auto& v : read_vectors("credential.txt")) {
    Digest got = credential_digest(Seed(from_hex(v.in[0])), digest_from_hex(v.in[1]),
                                   Epoch{dec(v.in[2])});
    EXPECT_EQ(to_hex(got), v.out[0]);
  }
}

TEST(CryptoVectors, Ed25519) {
  auto lines = read_vectors("ed25519.txt");
  ASSERT_GE(lines.size(), 4u);
  for (const auto& v : lines) {
    Bytes seed = from_hex(v.in[0]);
    Bytes pk = from_hex(v.out[0]);
    Digest msg = digest_from_hex(v.in[1]);
    Bytes sk = seed;
    sk.insert(sk.end(), pk.begin(), pk.end());
    Bytes sig = sign(sk, msg);
    EXPECT_EQ(to_hex(sig), v.out[1]);
    EXPECT_TRUE(verify(pk, sig, msg));
  }
}

// Second, independent SHA-256 route through OpenSSL on inputs the vector
// files do not cover.
TEST(CryptoDualRoute, Sha256MatchesOpenSsl) {
  SeededRandom rng = SeededRandom::from_u64(11);
  for (std::size_t n = 0; n < 300; n += 13) {
    Bytes msg = rng.bytes(n);
    Digest ours = sha256(msg);
    EXPECT_EQ(Bytes(ours.begin(), ours.end()), openssl_sha256({msg})) << "length " << n;
  }
}

TEST(CryptoDualRoute, TokenMatchesOpenSsl) {
  SeededRandom rng = SeededRandom::from_u64(12);
  for (int i = 0; i < 50; ++i) {
    Seed seed(rng.bytes(32));
    std::uint64_t e = rng.uniform(1u << 30);
    const std::uint8_t t = 0x01;
    std::uint8_t le[8];
    for (int b = 0; b < 8; ++b) le[b] = static_cast<std::uint8_t>(e >> (8 * b));
    Token ours = hash_token(seed, Epoch{e});
    EXPECT_EQ(Bytes(ours.bytes.begin(), ours.bytes.end()),
              openssl_sha256({ByteView(&t, 1), seed.bytes(), ByteView(le, 8)}));
  }
}

TEST(Crypto, DomainTagsSeparateHashes) {
  Seed seed(Bytes(32, 0x42));
  Digest zero{};
  EXPECT_NE(hash_token(seed, Epoch{0}).bytes, credential_digest(seed, zero, Epoch{0}));
  EXPECT_NE(hash_claim_digests({}), sha256({}));
}

TEST(Crypto, TokenIsEpochSensitive) {
  Seed seed(Bytes(32, 7));
  EXPECT_NE(hash_token(seed, Epoch{1}), hash_token(seed, Epoch{2}));
  EXPECT_NE(hash_token(seed, Epoch{1}), hash_token(Seed(Bytes(32, 8)), Epoch{1}));
}

TEST(Crypto, KeygenIsDeterministicUnderSeededRandom) {
  SeededRandom a = SeededRandom::from_u64(5), b = SeededRandom::from_u64(5);
  EXPECT_EQ(keygen(SecurityParams{}, a), keygen(SecurityParams{}, b));
  KeyPair kp = keygen(SecurityParams{}, a);
  EXPECT_EQ(kp.pk.size(), 32u);
  EXPECT_EQ(kp.sk.size(), 64u);
}

TEST(Crypto, SignVerifyRoundTrip) {
  SeededRandom rng = SeededRandom::from_u64(6);
  KeyPair kp = keygen(SecurityParams{}, rng);
  Digest msg = rng.digest();
  Bytes sig = sign(kp.sk, msg);
  EXPECT_TRUE(verify(kp.pk, sig, msg));
  msg[0] ^= 1;
  EXPECT_FALSE(verify(kp.pk, sig, msg));
  msg[0] ^= 1;
  sig[10] ^= 0x80;
  EXPECT_FALSE(verify(kp.pk, sig, msg));
}

TEST(Crypto, SignRejectsMalformedKeys) {
  SeededRandom rng = SeededRandom::from_u64(7);
  KeyPair kp = keygen(SecurityParams{}, rng);
  Digest msg{};
  EXPECT_THROW(sign(Bytes(10), msg), Error);
  Bytes inconsistent = kp.sk;
  inconsistent[40] ^= 1;  // public half no longer matches the seed
  try {
    sign(inconsistent, msg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidKey);
  }
}

TEST(Crypto, VerifyNeverThrows) {
  Digest msg{};
  EXPECT_FALSE(verify({}, {}, msg));
  EXPECT_FALSE(verify(Bytes(32, 1), Bytes(3), msg));
  EXPECT_FALSE(verify(Bytes(31), Bytes(64), msg));
}

TEST(Random, SeededStreamsAreReproducibleAndDistinct) {
  SeededRandom a = SeededRandom::from_u64(1), b = SeededRandom::from_u64(1);
  EXPECT_EQ(a.bytes(40), b.bytes(40));
  EXPECT_NE(a.bytes(40), b.bytes(41));
  EXPECT_NE(a.derive(0), a.derive(1));
  EXPECT_NE(SeededRandom::from_u64(1).bytes(16), SeededRandom::from_u64(2).bytes(16));
}

TEST(Random, UniformStaysInRange) {
  SeededRandom rng = SeededRandom::from_u64(3);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) ++hist[rng.uniform(7)];
  for (int c : hist) EXPECT_GT(c, 800);
  EXPECT_THROW(rng.uniform(0), Error);
}

}  // namespace
}  // namespace zktoken
