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

#ifndef ZKTOKEN_PROTOCOL_H_
#define ZKTOKEN_PROTOCOL_H_

// Issuer, holder and verifier procedures: setup, issuance, revocation,
// refresh, presentation and verification, plus selective trust and selective
// disclosure. Time and randomness are always explicit parameters.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "zktoken/backend.h"
#include "zktoken/kernels.h"
#include "zktoken/random.h"
#include "zktoken/registry.h"
#include "zktoken/relation.h"
#include "zktoken/types.h"

namespace zktoken {

// Verifier challenges shorter than this are refused.
inline constexpr std::size_t kMinChallengeSize = 16;

struct IssuerState {
  SecurityParams params;
  KeyPair keys;
  CommonReferenceString crs;
  EpochParams epoch_params;
  CircuitConfig cfg;
  RevList revlist;

  IssuerPublicParams public_params() const;
  bool operator==(const IssuerState&) const = default;
};

// Outcome of a verification step. Only kValid means "1".
enum class Verdict {
  kValid,
  kUntrustedIssuer,
  kMismatchedPeriod,       // verifier's m differs from the presentation's
  kMalformed,              // token / epoch counts inconsistent
  kNonConsecutiveEpochs,
  kProofCountMismatch,     // |proofs| != ceil(m / k)
  kClaimMismatch,          // a disclosed claim does not match its digest
  kInvalidProof,
  kEpochNotCovered,        // e precedes the verification period
  kPeriodExpired,          // e follows the verification period
  kCredentialExpired,      // e > exp
  kRevoked,
};

// Stable machine-readable reason, e.g. "revoked" or "period-expired".
std::string_view verdict_name(Verdict v);

struct VerifierPolicy {
  bool trust_all = true;
  std::set<Bytes> trusted_issuers;
  // 1 also accepts a presentation whose period ended exactly one epoch ago,
  // checked against the previous epoch's blacklist.
  std::uint8_t epoch_tolerance = 0;

  static VerifierPolicy trust_everyone() { return {}; }
  static VerifierPolicy trusting(std::set<Bytes> issuers);
  bool trusts(ByteView pk) const;
};

struct SetupResult {
  IssuerState state;
  RegistryRecord record;  // ready for publication, empty blacklist
};

SetupResult setup(const SecurityParams& params, const EpochParams& epoch_params,
                  const CircuitConfig& cfg, const ProofBackend& backend,
                  RandomSource& rng);

// Throws kExpInPast when exp < current.
Credential issue(const IssuerState& state, Claims claims, Epoch exp, Epoch current,
                 RandomSource& rng);

// Takes effect at the next refresh. Throws kForeignCredential.
void revoke(IssuerState& state, const Credential& vc);

// Drops revoked seeds that expired before e, then recomputes the whole
// blacklist for e.
Blacklist refresh(IssuerState& state, Epoch e, Execution exec = Execution::kParallel);

// Signed record carrying the issuer's public parameters and blacklist.
RegistryRecord make_record(const IssuerState& state, const Blacklist& blacklist);

// floor((now - ts0) / dur). Throws kClockBeforeGenesis when now < ts0.
Epoch current_epoch(const EpochParams& params, std::int64_t now);

// Statements for each k-sized block of a presentation, the last block padded.
std::vector<CircuitStatement> block_statements(ByteView pk, const Digest& h,
                                               ByteView challenge,
                                               std::span<const Token> tokens,
                                               std::span<const Epoch> epochs, Epoch exp,
                                               const Digest& claims_digest,
                                               std::uint32_t k);

// Builds a presentation for epochs e .. e+m-1. disclosure lists the claim
// indices to reveal; every claim's digest is always included.
Presentation present(const IssuerPublicParams& issuer, Epoch e, const Credential& vc,
                     std::uint32_t m, ByteView challenge,
                     std::span<const std::uint32_t> disclosure, const ProofBackend& backend,
                     RandomSource& rng, Execution exec = Execution::kParallel);

// True when the presentation covers epochs after the credential expires;
// those epochs can never verify.
bool extends_past_expiry(const Presentation& vp);

Verdict verify_proofs(const IssuerPublicParams& issuer, std::uint32_t m,
                      const Presentation& vp, ByteView challenge,
                      const ProofBackend& backend, Execution exec = Execution::kParallel);

// Throws kBlacklistEpochMismatch when blacklist.epoch != e.
Verdict verify_revocation_status(Epoch e, const Presentation& vp, const Blacklist& blacklist);

// previous_blacklist is consulted only with policy.epoch_tolerance = 1.
Verdict verification(const IssuerPublicParams& issuer, Epoch e, const Blacklist& blacklist,
                     std::uint32_t m, const Presentation& vp, ByteView challenge,
                     const VerifierPolicy& policy, const ProofBackend& backend,
                     const Blacklist* previous_blacklist = nullptr,
                     Execution exec = Execution::kParallel);

// A presentation whose proofs were validated once; later epochs only need
// the revocation check.
struct OpenedSession;

class VerificationSession {
 public:
  static OpenedSession open(const IssuerPublicParams& issuer, Epoch e, const Blacklist& blacklist,
                     std::uint32_t m, const Presentation& vp, ByteView challenge,
                     const VerifierPolicy& policy, const ProofBackend& backend);

  // Throws kSessionExpired when e lies past the verification period.
  Verdict check(Epoch e, const Blacklist& blacklist) const;

  const Bytes& issuer_pk() const { return pk_; }
  const Presentation& presentation() const { return vp_; }
  Epoch last_epoch() const { return vp_.epochs.back(); }

  // Restores a session saved by the caller after a successful open().
  static VerificationSession restore(Bytes pk, Presentation vp);

 private:
  VerificationSession(Bytes pk, Presentation vp) : pk_(std::move(pk)), vp_(std::move(vp)) {}

  Bytes pk_;
  Presentation vp_;
};

struct OpenedSession {
  Verdict verdict;
  std::optional<VerificationSession> session;  // set iff verdict == kValid
};

void write(Writer& w, const IssuerState& v);
void read(Reader& r, IssuerState& v);

}  // namespace zktoken

#endif  // ZKTOKEN_PROTOCOL_H_
