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

#include "zktoken/backend.h"

#include <sodium.h>
#include <sys/stat.h>

#include <fstream>
#include <iterator>
#include <mutex>

#include "zktoken/crypto.h"
#include "zktoken/error.h"

namespace zktoken {
namespace {

struct ProofKey {
  Digest key;
  Digest id;
};

ProofKey derive_key(const CircuitWitness& w) {
  ProofKey k;
  k.key = Sha256().u8(tag::kProofKey).update(encode(w)).finish();
  k.id = Sha256().u8(tag::kEscrowId).update(k.key).finish();
  return k;
}

Digest statement_tag(const Digest& key, const CommonReferenceString& crs,
                     const CircuitStatement& x) {
  Writer msg;
  msg.raw(crs.relation_digest);
  write(msg, x);
  return hmac_sha256(key, msg.bytes());
}

// The relation the statement's shape implies must be the one the CRS was
// generated for.
bool crs_matches(const CommonReferenceString& crs, const CircuitStatement& x) {
  if (crs.backend != BackendId::kRelationCheck || x.tokens.empty() ||
      x.tokens.size() != x.epochs.size()) {
    return false;
  }
  CircuitConfig cfg;
  cfg.k = static_cast<std::uint32_t>(x.tokens.size());
  return crs.relation_digest == relation_digest(cfg);
}

}  // namespace

std::size_t MemoryEscrow::DigestHash::operator()(const Digest& d) const noexcept {
  std::size_t h = 0;
  for (int i = 0; i < 8; ++i) h = (h << 8) | d[i];
  return h;
}

void MemoryEscrow::deposit(const Digest& id, const CircuitWitness& w) {
  std::unique_lock lock(mu_);
  entries_.insert_or_assign(id, w);
}

std::optional<CircuitWitness> MemoryEscrow::lookup(const Digest& id) const {
  std::shared_lock lock(mu_);
  auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::size_t MemoryEscrow::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

FileEscrow::FileEscrow(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create escrow dir: " + ec.message());
}

void FileEscrow::deposit(const Digest& id, const CircuitWitness& w) {
  auto path = dir_ / (to_hex(id) + ".wit");
  if (std::filesystem::exists(path)) return;
  auto tmp = path;
  tmp += ".tmp";
  Bytes body = encode_document(w);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(body.data()),
              static_cast<std::streamsize>(body.size()));
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  ::chmod(tmp.c_str(), 0600);
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename escrow entry: " + ec.message());
}

std::optional<CircuitWitness> FileEscrow::lookup(const Digest& id) const {
  std::ifstream in(dir_ / (to_hex(id) + ".wit"), std::ios::binary);
  if (!in) return std::nullopt;
  Bytes body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return decode_document<CircuitWitness>(body);
  } catch (const Error&) {
    return std::nullopt;
  }
}

RelationCheckBackend::RelationCheckBackend(std::shared_ptr<WitnessEscrow> escrow)
    : escrow_(std::move(escrow)) {
  ensure_crypto_initialized();
  if (!escrow_) throw Error(ErrorCode::kInvalidArgument, "escrow required");
}

CommonReferenceString RelationCheckBackend::setup(const SecurityParams& params,
                                                  const CircuitConfig& cfg) const {
  params.validate();
  cfg.validate();
  if (params.hash_id != cfg.hash_id || params.sig_id != cfg.sig_id) {
    throw Error(ErrorCode::kUnsupportedConfig,
                "circuit and security parameters disagree on primitives");
  }
  CommonReferenceString crs;
  crs.backend = BackendId::kRelationCheck;
  crs.relation_digest = relation_digest(cfg);
  return crs;
}

Proof RelationCheckBackend::prove(const CircuitStatement& x,
                                  const CommonReferenceString& crs,
                                  const CircuitWitness& w) const {
  if (!crs_matches(crs, x)) {
    throw Error(ErrorCode::kCrsMismatch, "statement does not match the CRS relation");
  }
  if (!relation_holds(x, w)) {
    throw Error(ErrorCode::kRelationUnsatisfied, "witness does not satisfy the relation");
  }
  ProofKey k = derive_key(w);
  escrow_->deposit(k.id, w);
  Digest t = statement_tag(k.key, crs, x);
  Proof p;
  p.backend = BackendId::kRelationCheck;
  p.bytes.reserve(kProofSize);
  p.bytes.insert(p.bytes.end(), k.id.begin(), k.id.end());
  p.bytes.insert(p.bytes.end(), t.begin(), t.end());
  return p;
}

bool RelationCheckBackend::verify(const CircuitStatement& x,
                                  const CommonReferenceString& crs,
                                  const Proof& proof) const {
  if (proof.backend != BackendId::kRelationCheck || proof.bytes.size() != kProofSize ||
      !crs_matches(crs, x)) {
    return false;
  }
  Digest id;
  std::copy_n(proof.bytes.begin(), kDigestSize, id.begin());
  std::optional<CircuitWitness> w = escrow_->lookup(id);
  if (!w) return false;
  ProofKey k = derive_key(*w);
  if (k.id != id || !relation_holds(x, *w)) return false;
  Digest expected = statement_tag(k.key, crs, x);
  return sodium_memcmp(expected.data(), proof.bytes.data() + kDigestSize, kDigestSize) == 0;
}

std::unique_ptr<ProofBackend> make_backend(BackendId id,
                                           std::shared_ptr<WitnessEscrow> escrow) {
  switch (id) {
    case BackendId::kRelationCheck:
      if (!escrow) escrow = std::make_shared<MemoryEscrow>();
      return std::make_unique<RelationCheckBackend>(std::move(escrow));
    case BackendId::kSnark:
      break;
  }
  throw Error(ErrorCode::kUnsupportedConfig, "SNARK backend is not built");
}

}  // namespace zktoken
