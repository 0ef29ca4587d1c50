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

#include "zktoken/random.h"

#include <sodium.h>

#include <limits>

#include "zktoken/crypto.h"
#include "zktoken/error.h"

namespace zktoken {

Bytes RandomSource::bytes(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

Digest RandomSource::digest() {
  Digest d;
  fill(d);
  return d;
}

std::uint64_t RandomSource::uniform(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint8_t buf[8];
    fill(buf);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
    if (v < limit) return v % bound;
  }
}

SystemRandom::SystemRandom() { ensure_crypto_initialized(); }

void SystemRandom::fill(std::span<std::uint8_t> out) {
  randombytes_buf(out.data(), out.size());
}

SeededRandom::SeededRandom(const Digest& seed) : seed_(seed) {
  ensure_crypto_initialized();
}

SeededRandom SeededRandom::from_u64(std::uint64_t seed) {
  ensure_crypto_initialized();
  return SeededRandom(Sha256().u8(tag::kRngStream).u64(seed).finish());
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::uint64_t call;
  {
    std::lock_guard lock(mu_);
    call = counter_++;
  }
  Digest key = Sha256().u8(tag::kRngStream).update(seed_).u64(call).finish();
  randombytes_buf_deterministic(out.data(), out.size(), key.data());
}

Digest SeededRandom::derive(std::uint64_t stream) const {
  return Sha256()
      .u8(tag::kRngStream)
      .update(seed_)
      .update(as_bytes("stream"))
      .u64(stream)
      .finish();
}

}  // namespace zktoken
