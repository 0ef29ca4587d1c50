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

#include "zktoken/relation.h"

#include <sstream>

#include "zktoken/crypto.h"
#include "zktoken/error.h"

namespace zktoken {

// Upper bound on tokens per proof. Larger batches bring no benefit over the
// verification periods the scheme targets.
inline constexpr std::uint32_t kMaxBatch = 1024;

void CircuitConfig::validate() const {
  if (k == 0 || k > kMaxBatch) {
    throw Error(ErrorCode::kUnsupportedConfig, "k must be in [1, 1024]");
  }
  if (hash_id != HashId::kSha256 || sig_id != SigId::kEd25519) {
    throw Error(ErrorCode::kUnsupportedConfig, "unsupported hash or signature");
  }
}

RelationTrace evaluate_relation(const CircuitStatement& x, const CircuitWitness& w) {
  RelationTrace t;
  t.shape = !x.tokens.empty() && x.tokens.size() == x.epochs.size() &&
            !w.seed.empty() && w.nonce.size() == w.seed.size();
  if (!t.shape) return t;

  t.signature = verify(x.pk, w.sig, credential_digest(w.seed, x.claims_digest, x.exp));

  t.tokens = true;
  for (std::size_t i = 0; i < x.tokens.size(); ++i) {
    if (hash_token(w.seed, x.epochs[i]) != x.tokens[i]) {
      t.tokens = false;
      break;
    }
  }

  t.binding = hash_bind(x.challenge, w.nonce) == x.h;
  return t;
}

TokenBlock pad_block(std::span<const Token> tokens, std::span<const Epoch> epochs,
                     std::uint32_t k) {
  if (tokens.empty() && epochs.empty()) {
    throw Error(ErrorCode::kEmptyBlock, "cannot pad an empty block");
  }
  if (tokens.size() != epochs.size() || tokens.size() > k) {
    throw Error(ErrorCode::kInvalidArgument, "block does not fit k");
  }
  TokenBlock b{{tokens.begin(), tokens.end()}, {epochs.begin(), epochs.end()}};
  b.tokens.resize(k, tokens.back());
  b.epochs.resize(k, epochs.back());
  return b;
}

std::string relation_descriptor(const CircuitConfig& cfg) {
  std::ostringstream os;
  os << "zktoken-relation/1\n"
     << "k=" << cfg.k << "\n"
     << "hash=" << hash_name(cfg.hash_id) << "\n"
     << "sig=" << sig_name(cfg.sig_id) << "\n"
     << "public=pk,h,challenge,epochs[k],tokens[k],exp,claims_digest\n"
     << "private=sig,seed,nonce\n"
     << "assert=verify(pk,sig,H3(seed,claims_digest,exp))\n"
     << "assert=forall i<k: H1(seed,epochs[i])==tokens[i]\n"
     << "assert=H2(challenge,nonce)==h\n";
  return os.str();
}

Digest relation_digest(const CircuitConfig& cfg) {
  return Sha256().u8(tag::kRelation).update(as_bytes(relation_descriptor(cfg))).finish();
}

void write(Writer& w, const CircuitConfig& v) {
  w.u32(v.k);
  w.u8(static_cast<std::uint8_t>(v.hash_id));
  w.u8(static_cast<std::uint8_t>(v.sig_id));
}

void read(Reader& r, CircuitConfig& v) {
  v.k = r.u32();
  v.hash_id = static_cast<HashId>(r.u8());
  v.sig_id = static_cast<SigId>(r.u8());
  try {
    v.validate();
  } catch (const Error& e) {
    malformed(e.what());
  }
}

void write(Writer& w, const CircuitStatement& v) {
  w.var_bytes(v.pk);
  w.raw(v.h);
  w.var_bytes(v.challenge);
  w.count(v.epochs.size());
  for (const Epoch& e : v.epochs) write(w, e);
  w.count(v.tokens.size());
  for (const Token& t : v.tokens) write(w, t);
  write(w, v.exp);
  w.raw(v.claims_digest);
}

void read(Reader& r, CircuitStatement& v) {
  v.pk = r.var_bytes();
  v.h = r.digest();
  v.challenge = r.var_bytes();
  v.epochs.resize(r.count(8));
  for (Epoch& e : v.epochs) read(r, e);
  v.tokens.resize(r.count(kDigestSize));
  for (Token& t : v.tokens) read(r, t);
  read(r, v.exp);
  v.claims_digest = r.digest();
}

void write(Writer& w, const CircuitWitness& v) {
  w.var_bytes(v.sig);
  write(w, v.seed);
  w.var_bytes(v.nonce);
}

void read(Reader& r, CircuitWitness& v) {
  v.sig = r.var_bytes();
  read(r, v.seed);
  v.nonce = r.var_bytes();
}

}  // namespace zktoken
