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

#ifndef ZKTOKEN_RELATION_H_
#define ZKTOKEN_RELATION_H_

// The zkToken relation: the statement/witness layout and the predicate every
// proof backend must enforce.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zktoken/bytes.h"
#include "zktoken/encoding.h"
#include "zktoken/types.h"

namespace zktoken {

struct CircuitConfig {
  std::uint32_t k = 1;  // tokens per proof
  HashId hash_id = HashId::kSha256;
  SigId sig_id = SigId::kEd25519;

  void validate() const;
  bool operator==(const CircuitConfig&) const = default;
};

// Public inputs.
struct CircuitStatement {
  Bytes pk;
  Digest h{};
  Bytes challenge;
  std::vector<Epoch> epochs;
  std::vector<Token> tokens;
  Epoch exp;
  Digest claims_digest{};

  bool operator==(const CircuitStatement&) const = default;
};

// Private inputs.
struct CircuitWitness {
  Bytes sig;
  Seed seed;
  Bytes nonce;

  bool operator==(const CircuitWitness&) const = default;
};

// Per-condition outcome of one relation evaluation. Conditions are always
// evaluated in the fixed order signature, tokens, binding.
struct RelationTrace {
  bool shape = false;      // |epochs| = |tokens| >= 1 and |nonce| = |seed|
  bool signature = false;  // Verify(pk, sig, H(seed, H(claims), exp)) = 1
  bool tokens = false;     // H(seed, epochs[i]) = tokens[i] for every i
  bool binding = false;    // H(challenge, nonce) = h

  bool holds() const { return shape && signature && tokens && binding; }
  bool operator==(const RelationTrace&) const = default;
};

RelationTrace evaluate_relation(const CircuitStatement& x, const CircuitWitness& w);

inline bool relation_holds(const CircuitStatement& x, const CircuitWitness& w) {
  return evaluate_relation(x, w).holds();
}

struct TokenBlock {
  std::vector<Token> tokens;
  std::vector<Epoch> epochs;
};

// Extends a short final block to exactly k entries by repeating its last
// (token, epoch) pair. Throws kEmptyBlock for empty input and
// kInvalidArgument when the lists disagree in length or exceed k.
TokenBlock pad_block(std::span<const Token> tokens, std::span<const Epoch> epochs,
                     std::uint32_t k);

// Textual description of the relation published next to the CRS.
std::string relation_descriptor(const CircuitConfig& cfg);
Digest relation_digest(const CircuitConfig& cfg);

void write(Writer& w, const CircuitConfig& v);
void write(Writer& w, const CircuitStatement& v);
void write(Writer& w, const CircuitWitness& v);
void read(Reader& r, CircuitConfig& v);
void read(Reader& r, CircuitStatement& v);
void read(Reader& r, CircuitWitness& v);

}  // namespace zktoken

#endif  // ZKTOKEN_RELATION_H_
