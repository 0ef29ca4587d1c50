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

#ifndef ZKTOKEN_BACKEND_H_
#define ZKTOKEN_BACKEND_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "zktoken/relation.h"
#include "zktoken/types.h"

namespace zktoken {

// Setup / Prove / Verify over the zkToken relation. prove and verify must be
// safe to call concurrently.
class ProofBackend {
 public:
  virtual ~ProofBackend() = default;

  virtual BackendId id() const = 0;

  // Throws kUnsupportedConfig for configurations the backend cannot serve.
  virtual CommonReferenceString setup(const SecurityParams& params,
                                      const CircuitConfig& cfg) const = 0;

  // Throws kRelationUnsatisfied when relation_holds(x, w) is false and
  // kCrsMismatch when the CRS was made for another backend or relation.
  virtual Proof prove(const CircuitStatement& x, const CommonReferenceString& crs,
                      const CircuitWitness& w) const = 0;

  // Never throws; anything malformed is a reject.
  virtual bool verify(const CircuitStatement& x, const CommonReferenceString& crs,
                      const Proof& proof) const = 0;
};

// Holds the witnesses behind relation-check proofs, keyed by a digest of the
// witness. Only the test harness and local tooling hold an escrow.
class WitnessEscrow {
 public:
  virtual ~WitnessEscrow() = default;
  virtual void deposit(const Digest& id, const CircuitWitness& w) = 0;
  virtual std::optional<CircuitWitness> lookup(const Digest& id) const = 0;
};

class MemoryEscrow final : public WitnessEscrow {
 public:
  void deposit(const Digest& id, const CircuitWitness& w) override;
  std::optional<CircuitWitness> lookup(const Digest& id) const override;
  std::size_t size() const;

 private:
  struct DigestHash {
    std::size_t operator()(const Digest& d) const noexcept;
  };
  mutable std::shared_mutex mu_;
  std::unordered_map<Digest, CircuitWitness, DigestHash> entries_;
};

// One file per witness under dir, written with owner-only permissions.
class FileEscrow final : public WitnessEscrow {
 public:
  explicit FileEscrow(std::filesystem::path dir);
  void deposit(const Digest& id, const CircuitWitness& w) override;
  std::optional<CircuitWitness> lookup(const Digest& id) const override;

 private:
  std::filesystem::path dir_;
};

// Transparent backend used to exercise the protocol without SNARK cost.
//
// A proof is (escrow id, tag) where key = H(0x08 || encode(w)),
// id = H(0x09 || key) and tag = HMAC(key, relation digest || encode(x)).
// Verification fetches w from the escrow, re-derives key and id, evaluates
// the relation on (x, w) and checks the tag. The proof itself carries no
// witness material, but verification is only possible where the escrow is.
class RelationCheckBackend final : public ProofBackend {
 public:
  static constexpr std::size_t kProofSize = 2 * kDigestSize;

  explicit RelationCheckBackend(
      std::shared_ptr<WitnessEscrow> escrow = std::make_shared<MemoryEscrow>());

  BackendId id() const override { return BackendId::kRelationCheck; }
  CommonReferenceString setup(const SecurityParams& params,
                              const CircuitConfig& cfg) const override;
  Proof prove(const CircuitStatement& x, const CommonReferenceString& crs,
              const CircuitWitness& w) const override;
  bool verify(const CircuitStatement& x, const CommonReferenceString& crs,
              const Proof& proof) const override;

  const std::shared_ptr<WitnessEscrow>& escrow() const { return escrow_; }

 private:
  std::shared_ptr<WitnessEscrow> escrow_;
};

// A null escrow means a fresh MemoryEscrow. kSnark throws kUnsupportedConfig:
// that backend is not part of this build.
std::unique_ptr<ProofBackend> make_backend(BackendId id,
                                           std::shared_ptr<WitnessEscrow> escrow);

}  // namespace zktoken

#endif  // ZKTOKEN_BACKEND_H_
