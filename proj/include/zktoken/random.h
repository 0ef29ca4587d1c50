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

#ifndef ZKTOKEN_RANDOM_H_
#define ZKTOKEN_RANDOM_H_

#include <cstdint>
#include <mutex>
#include <span>

#include "zktoken/bytes.h"

namespace zktoken {

// Source of randomness injected into every randomized operation (key
// generation, seeds, nonces, challenges) so that tests can pin outputs.
// Implementations must be safe for concurrent use.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n);
  Digest digest();
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  bool coin() { return uniform(2) == 1; }
};

// Operating-system CSPRNG.
class SystemRandom final : public RandomSource {
 public:
  SystemRandom();
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic ChaCha20 stream keyed by a 32-byte seed. Each fill() call
// draws from a fresh sub-key derived from (seed, call counter), so the output
// depends only on the seed and the sequence of request sizes.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(const Digest& seed);
  static SeededRandom from_u64(std::uint64_t seed);

  void fill(std::span<std::uint8_t> out) override;

  // Independent child stream, e.g. one per game trial.
  Digest derive(std::uint64_t stream) const;

 private:
  Digest seed_;
  std::uint64_t counter_ = 0;
  std::mutex mu_;
};

}  // namespace zktoken

#endif  // ZKTOKEN_RANDOM_H_
