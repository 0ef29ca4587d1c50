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

#include "zktoken/protocol.h"

#include <algorithm>
#include <limits>

#include "zktoken/crypto.h"
#include "zktoken/error.h"

namespace zktoken {
namespace {

bool consecutive(std::span<const Epoch> epochs) {
  for (std::size_t i = 1; i < epochs.size(); ++i) {
    if (epochs[i - 1].value == std::numeric_limits<std::uint64_t>::max() ||
        epochs[i].value != epochs[i - 1].value + 1) {
      return false;
    }
  }
  return true;
}

std::size_t blocks_for(std::uint32_t m, std::uint32_t k) { return (m + k - 1) / k; }

}  // namespace

IssuerPublicParams IssuerState::public_params() const {
  return IssuerPublicParams{keys.pk, crs, epoch_params, cfg.k};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kValid: return "valid";
    case Verdict::kUntrustedIssuer: return "untrusted-issuer";
    case Verdict::kMismatchedPeriod: return "period-mismatch";
    case Verdict::kMalformed: return "malformed";
    case Verdict::kNonConsecutiveEpochs: return "non-consecutive-epochs";
    case Verdict::kProofCountMismatch: return "proof-count-mismatch";
    case Verdict::kClaimMismatch: return "claim-mismatch";
    case Verdict::kInvalidProof: return "invalid-proof";
    case Verdict::kEpochNotCovered: return "epoch-not-covered";
    case Verdict::kPeriodExpired: return "period-expired";
    case Verdict::kCredentialExpired: return "credential-expired";
    case Verdict::kRevoked: return "revoked";
  }
  return "unknown";
}

VerifierPolicy VerifierPolicy::trusting(std::set<Bytes> issuers) {
  VerifierPolicy p;
  p.trust_all = false;
  p.trusted_issuers = std::move(issuers);
  return p;
}

bool VerifierPolicy::trusts(ByteView pk) const {
  return trust_all || trusted_issuers.count(Bytes(pk.begin(), pk.end())) != 0;
}

SetupResult setup(const SecurityParams& params, const EpochParams& epoch_params,
                  const CircuitConfig& cfg, const ProofBackend& backend,
                  RandomSource& rng) {
  params.validate();
  epoch_params.validate();
  cfg.validate();
  IssuerState state;
  state.params = params;
  state.keys = keygen(params, rng);
  state.crs = backend.setup(params, cfg);
  state.epoch_params = epoch_params;
  state.cfg = cfg;
  Blacklist empty{Epoch{0}, {}};
  RegistryRecord record = make_record(state, empty);
  return {std::move(state), std::move(record)};
}

Credential issue(const IssuerState& state, Claims claims, Epoch exp, Epoch current,
                 RandomSource& rng) {
  if (exp < current) {
    throw Error(ErrorCode::kExpInPast, "expiration epoch " + std::to_string(exp.value) +
                                           " precedes current epoch " +
                                           std::to_string(current.value));
  }
  Credential vc;
  vc.seed = Seed(rng.bytes(state.params.seed_bytes()));
  vc.claims = std::move(claims);
  vc.exp = exp;
  vc.sig = sign(state.keys.sk,
                credential_digest(vc.seed, hash_claims(vc.claims).digest, vc.exp));
  return vc;
}

void revoke(IssuerState& state, const Credential& vc) {
  Digest msg = credential_digest(vc.seed, hash_claims(vc.claims).digest, vc.exp);
  if (!verify(state.keys.pk, vc.sig, msg)) {
    throw Error(ErrorCode::kForeignCredential, "credential not signed by this issuer");
  }
  state.revlist.entries.insert_or_assign(vc.seed, vc.exp);
}

Blacklist refresh(IssuerState& state, Epoch e, Execution exec) {
  std::erase_if(state.revlist.entries, [&](const auto& entry) { return entry.second < e; });
  std::vector<Seed> seeds;
  seeds.reserve(state.revlist.size());
  for (const auto& [seed, exp] : state.revlist.entries) seeds.push_back(seed);
  std::vector<Token> tokens = epoch_tokens(seeds, e, exec);
  return Blacklist{e, std::set<Token>(tokens.begin(), tokens.end())};
}

RegistryRecord make_record(const IssuerState& state, const Blacklist& blacklist) {
  return make_signed_record(state.public_params(), blacklist, state.keys.sk);
}

Epoch current_epoch(const EpochParams& params, std::int64_t now) {
  params.validate();
  if (now < params.ts0) {
    throw Error(ErrorCode::kClockBeforeGenesis, "clock reads before ts0");
  }
  auto elapsed = static_cast<std::uint64_t>(now) - static_cast<std::uint64_t>(params.ts0);
  return Epoch{elapsed / static_cast<std::uint64_t>(params.dur)};
}

std::vector<CircuitStatement> block_statements(ByteView pk, const Digest& h,
                                               ByteView challenge,
                                               std::span<const Token> tokens,
                                               std::span<const Epoch> epochs, Epoch exp,
                                               const Digest& claims_digest,
                                               std::uint32_t k) {
  std::vector<CircuitStatement> out;
  out.reserve(blocks_for(static_cast<std::uint32_t>(tokens.size()), k));
  for (std::size_t start = 0; start < tokens.size(); start += k) {
    std::size_t len = std::min<std::size_t>(k, tokens.size() - start);
    TokenBlock block = pad_block(tokens.subspan(start, len), epochs.subspan(start, len), k);
    CircuitStatement x;
    x.pk.assign(pk.begin(), pk.end());
    x.h = h;
    x.challenge.assign(challenge.begin(), challenge.end());
    x.epochs = std::move(block.epochs);
    x.tokens = std::move(block.tokens);
    x.exp = exp;
    x.claims_digest = claims_digest;
    out.push_back(std::move(x));
  }
  return out;
}

Presentation present(const IssuerPublicParams& issuer, Epoch e, const Credential& vc,
                     std::uint32_t m, ByteView challenge,
                     std::span<const std::uint32_t> disclosure, const ProofBackend& backend,
                     RandomSource& rng, Execution exec) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  if (issuer.k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (challenge.size() < kMinChallengeSize) {
    throw Error(ErrorCode::kInvalidArgument, "challenge shorter than 16 bytes");
  }
  if (e.value > std::numeric_limits<std::uint64_t>::max() - (m - 1)) {
    throw Error(ErrorCode::kInvalidArgument, "verification period overflows");
  }
  std::vector<std::uint32_t> reveal(disclosure.begin(), disclosure.end());
  std::sort(reveal.begin(), reveal.end());
  reveal.erase(std::unique(reveal.begin(), reveal.end()), reveal.end());
  if (!reveal.empty() && reveal.back() >= vc.claims.size()) {
    throw Error(ErrorCode::kInvalidArgument, "disclosure index out of range");
  }

  ClaimsDigest claims = hash_claims(vc.claims);
  Bytes nonce = rng.bytes(vc.seed.size());

  Presentation vp;
  vp.m = m;
  vp.h = hash_bind(challenge, nonce);
  vp.tokens = period_tokens(vc.seed, e, m, exec);
  vp.epochs.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) vp.epochs.push_back(e + i);
  for (std::uint32_t idx : reveal) vp.disclosed.push_back({idx, vc.claims[idx]});
  vp.claim_digests = claims.per_claim;
  vp.exp = vc.exp;

  auto statements = block_statements(issuer.pk, vp.h, challenge, vp.tokens, vp.epochs,
                                     vc.exp, claims.digest, issuer.k);
  CircuitWitness w{vc.sig, vc.seed, std::move(nonce)};
  vp.proofs = prove_blocks(backend, issuer.crs, statements, w, exec);
  return vp;
}

bool extends_past_expiry(const Presentation& vp) {
  return !vp.epochs.empty() && vp.epochs.back() > vp.exp;
}

Verdict verify_proofs(const IssuerPublicParams& issuer, std::uint32_t m,
                      const Presentation& vp, ByteView challenge,
                      const ProofBackend& backend, Execution exec) {
  if (m == 0 || vp.m != m) return Verdict::kMismatchedPeriod;
  if (vp.tokens.size() != m || vp.epochs.size() != m) return Verdict::kMalformed;
  if (!consecutive(vp.epochs)) return Verdict::kNonConsecutiveEpochs;
  if (issuer.k == 0 || vp.proofs.size() != blocks_for(m, issuer.k)) {
    return Verdict::kProofCountMismatch;
  }
  for (const DisclosedClaim& d : vp.disclosed) {
    if (d.index >= vp.claim_digests.size() ||
        hash_claim(d.index, d.claim) != vp.claim_digests[d.index]) {
      return Verdict::kClaimMismatch;
    }
  }
  Digest claims_digest = hash_claim_digests(vp.claim_digests);
  auto statements = block_statements(issuer.pk, vp.h, challenge, vp.tokens, vp.epochs,
                                     vp.exp, claims_digest, issuer.k);
  if (!verify_blocks(backend, issuer.crs, statements, vp.proofs, exec)) {
    return Verdict::kInvalidProof;
  }
  return Verdict::kValid;
}

Verdict verify_revocation_status(Epoch e, const Presentation& vp, const Blacklist& blacklist) {
  if (blacklist.epoch != e) {
    throw Error(ErrorCode::kBlacklistEpochMismatch,
                "blacklist is for epoch " + std::to_string(blacklist.epoch.value) +
                    ", verifying epoch " + std::to_string(e.value));
  }
  if (vp.epochs.empty() || vp.tokens.size() != vp.epochs.size()) return Verdict::kMalformed;
  if (e < vp.epochs.front()) return Verdict::kEpochNotCovered;
  if (e > vp.epochs.back()) return Verdict::kPeriodExpired;
  if (e > vp.exp) return Verdict::kCredentialExpired;
  const Token& token = vp.tokens[e.value - vp.epochs.front().value];
  if (blacklist.contains(token)) return Verdict::kRevoked;
  return Verdict::kValid;
}

Verdict verification(const IssuerPublicParams& issuer, Epoch e, const Blacklist& blacklist,
                     std::uint32_t m, const Presentation& vp, ByteView challenge,
                     const VerifierPolicy& policy, const ProofBackend& backend,
                     const Blacklist* previous_blacklist, Execution exec) {
  if (!policy.trusts(issuer.pk)) return Verdict::kUntrustedIssuer;
  Verdict proofs = verify_proofs(issuer, m, vp, challenge, backend, exec);
  if (proofs != Verdict::kValid) return proofs;
  Verdict status = verify_revocation_status(e, vp, blacklist);
  if (status == Verdict::kPeriodExpired && policy.epoch_tolerance == 1 &&
      previous_blacklist != nullptr && e.value > 0 &&
      previous_blacklist->epoch == e - 1) {
    return verify_revocation_status(e - 1, vp, *previous_blacklist);
  }
  return status;
}

OpenedSession VerificationSession::open(
    const IssuerPublicParams& issuer, Epoch e, const Blacklist& blacklist, std::uint32_t m,
    const Presentation& vp, ByteView challenge, const VerifierPolicy& policy,
    const ProofBackend& backend) {
  Verdict v = verification(issuer, e, blacklist, m, vp, challenge, policy, backend);
  if (v != Verdict::kValid) return {v, std::nullopt};
  return {v, VerificationSession(issuer.pk, vp)};
}

Verdict VerificationSession::check(Epoch e, const Blacklist& blacklist) const {
  if (e > last_epoch()) {
    throw Error(ErrorCode::kSessionExpired, "verification period has ended");
  }
  return verify_revocation_status(e, vp_, blacklist);
}

VerificationSession VerificationSession::restore(Bytes pk, Presentation vp) {
  if (vp.epochs.empty() || vp.tokens.size() != vp.epochs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "session presentation is malformed");
  }
  return VerificationSession(std::move(pk), std::move(vp));
}

void write(Writer& w, const IssuerState& v) {
  write(w, v.params);
  write(w, v.keys);
  write(w, v.crs);
  write(w, v.epoch_params);
  write(w, v.cfg);
  write(w, v.revlist);
}

void read(Reader& r, IssuerState& v) {
  read(r, v.params);
  read(r, v.keys);
  read(r, v.crs);
  read(r, v.epoch_params);
  read(r, v.cfg);
  read(r, v.revlist);
}

}  // namespace zktoken
