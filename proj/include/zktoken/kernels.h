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

#ifndef ZKTOKEN_KERNELS_H_
#define ZKTOKEN_KERNELS_H_

// Data-parallel inner loops of the scheme. Every kernel has a serial
// reference; the OpenMP versions must produce identical results and are
// checked against the references in tests.

#include <span>
#include <vector>

#include "zktoken/backend.h"
#include "zktoken/relation.h"
#include "zktoken/types.h"

namespace zktoken {

enum class Execution { kSerial, kParallel };

namespace kernels {

// tokens[i] = hash_token(seeds[i], e): the refresh loop.
std::vector<Token> epoch_tokens_serial(std::span<const Seed> seeds, Epoch e);
std::vector<Token> epoch_tokens_parallel(std::span<const Seed> seeds, Epoch e);

// tokens[i] = hash_token(seed, first + i) for i < m: the presentation loop.
std::vector<Token> period_tokens_serial(const Seed& seed, Epoch first, std::uint32_t m);
std::vector<Token> period_tokens_parallel(const Seed& seed, Epoch first, std::uint32_t m);

// One proof per statement, all under the same witness.
std::vector<Proof> prove_blocks_serial(const ProofBackend& backend,
                                       const CommonReferenceString& crs,
                                       std::span<const CircuitStatement> blocks,
                                       const CircuitWitness& w);
std::vector<Proof> prove_blocks_parallel(const ProofBackend& backend,
                                         const CommonReferenceString& crs,
                                         std::span<const CircuitStatement> blocks,
                                         const CircuitWitness& w);

// True iff every proof verifies against its statement. Checks all blocks.
bool verify_blocks_serial(const ProofBackend& backend, const CommonReferenceString& crs,
                          std::span<const CircuitStatement> blocks,
                          std::span<const Proof> proofs);
bool verify_blocks_parallel(const ProofBackend& backend, const CommonReferenceString& crs,
                            std::span<const CircuitStatement> blocks,
                            std::span<const Proof> proofs);

}  // namespace kernels

std::vector<Token> epoch_tokens(std::span<const Seed> seeds, Epoch e, Execution exec);
std::vector<Token> period_tokens(const Seed& seed, Epoch first, std::uint32_t m,
                                 Execution exec);
std::vector<Proof> prove_blocks(const ProofBackend& backend, const CommonReferenceString& crs,
                                std::span<const CircuitStatement> blocks,
                                const CircuitWitness& w, Execution exec);
bool verify_blocks(const ProofBackend& backend, const CommonReferenceString& crs,
                   std::span<const CircuitStatement> blocks, std::span<const Proof> proofs,
                   Execution exec);

}  // namespace zktoken

#endif  // ZKTOKEN_KERNELS_H_
