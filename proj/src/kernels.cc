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

#include "zktoken/kernels.h"

#include <exception>

#include "zktoken/crypto.h"

namespace zktoken {
namespace kernels {

std::vector<Token> epoch_tokens_serial(std::span<const Seed> seeds, Epoch e) {
  std::vector<Token> out;
  out.reserve(seeds.size());
  for (const Seed& s : seeds) out.push_back(hash_token(s, e));
  return out;
}

std::vector<Token> epoch_tokens_parallel(std::span<const Seed> seeds, Epoch e) {
  std::vector<Token> out(seeds.size());
  const auto n = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = hash_token(seeds[i], e);
  }
  return out;
}

std::vector<Token> period_tokens_serial(const Seed& seed, Epoch first, std::uint32_t m) {
  std::vector<Token> out;
  out.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) out.push_back(hash_token(seed, first + i));
  return out;
}

std::vector<Token> period_tokens_parallel(const Seed& seed, Epoch first, std::uint32_t m) {
  std::vector<Token> out(m);
  const auto n = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = hash_token(seed, first + static_cast<std::uint64_t>(i));
  }
  return out;
}

std::vector<Proof> prove_blocks_serial(const ProofBackend& backend,
                                       const CommonReferenceString& crs,
                                       std::span<const CircuitStatement> blocks,
                                       const CircuitWitness& w) {
  std::vector<Proof> out;
  out.reserve(blocks.size());
  for (const CircuitStatement& x : blocks) out.push_back(backend.prove(x, crs, w));
  return out;
}

std::vector<Proof> prove_blocks_parallel(const ProofBackend& backend,
                                         const CommonReferenceString& crs,
                                         std::span<const CircuitStatement> blocks,
                                         const CircuitWitness& w) {
  std::vector<Proof> out(blocks.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = backend.prove(blocks[i], crs, w);
    } catch (...) {
#pragma omp critical(zktoken_prove_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

bool verify_blocks_serial(const ProofBackend& backend, const CommonReferenceString& crs,
                          std::span<const CircuitStatement> blocks,
                          std::span<const Proof> proofs) {
  if (blocks.size() != proofs.size()) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!backend.verify(blocks[i], crs, proofs[i])) return false;
  }
  return true;
}

bool verify_blocks_parallel(const ProofBackend& backend, const CommonReferenceString& crs,
                            std::span<const CircuitStatement> blocks,
                            std::span<const Proof> proofs) {
  if (blocks.size() != proofs.size()) return false;
  bool ok = true;
  const auto n = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (std::int64_t i = 0; i < n; ++i) {
    ok = ok && backend.verify(blocks[i], crs, proofs[i]);
  }
  return ok;
}

}  // namespace kernels

std::vector<Token> epoch_tokens(std::span<const Seed> seeds, Epoch e, Execution exec) {
  return exec == Execution::kParallel ? kernels::epoch_tokens_parallel(seeds, e)
                                      : kernels::epoch_tokens_serial(seeds, e);
}

std::vector<Token> period_tokens(const Seed& seed, Epoch first, std::uint32_t m,
                                 Execution exec) {
  return exec == Execution::kParallel ? kernels::period_tokens_parallel(seed, first, m)
                                      : kernels::period_tokens_serial(seed, first, m);
}

std::vector<Proof> prove_blocks(const ProofBackend& backend, const CommonReferenceString& crs,
                                std::span<const CircuitStatement> blocks,
                                const CircuitWitness& w, Execution exec) {
  return exec == Execution::kParallel
             ? kernels::prove_blocks_parallel(backend, crs, blocks, w)
             : kernels::prove_blocks_serial(backend, crs, blocks, w);
}

bool verify_blocks(const ProofBackend& backend, const CommonReferenceString& crs,
                   std::span<const CircuitStatement> blocks, std::span<const Proof> proofs,
                   Execution exec) {
  return exec == Execution::kParallel
             ? kernels::verify_blocks_parallel(backend, crs, blocks, proofs)
             : kernels::verify_blocks_serial(backend, crs, blocks, proofs);
}

}  // namespace zktoken
