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

#ifndef ZKTOKEN_GAME_H_
#define ZKTOKEN_GAME_H_

// Executable untraceability game: a challenger with the GenVC, Revoke,
// Refresh and GenVP oracles, a pluggable two-stage adversary, and a trial
// runner that reports the adversary's success rate.
//
// The game quantifies over all adversaries; this harness only measures the
// strategies it is given.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zktoken/backend.h"
#include "zktoken/protocol.h"
#include "zktoken/random.h"

namespace zktoken {

struct GameConfig {
  EpochParams epoch_params{1'700'000'000, 86400};
  std::uint32_t k = 1;
  std::uint32_t honest_holders = 4;
  std::uint32_t max_period = 8;      // m0, m1 drawn from [1, max_period]
  std::uint32_t validity_epochs = 365;
};

// Query sets and issuer state of one game instance.
struct GameState {
  IssuerState issuer;
  std::vector<Credential> q_h;  // honest holders' credentials
  std::vector<Credential> q_c;  // credentials handed to the adversary
  std::vector<Credential> q_r;  // revoked through the oracle
  std::vector<Presentation> q_p;
  std::int64_t now = 0;
};

// What the first adversary stage may call.
class GameOracles {
 public:
  virtual ~GameOracles() = default;

  virtual const IssuerPublicParams& issuer() const = 0;
  virtual RevList revlist() const = 0;
  virtual Epoch epoch() const = 0;
  virtual const ProofBackend& backend() const = 0;

  virtual Credential oracle_genvc() = 0;
  // nullopt plays the role of the failure symbol: vc was not issued to the
  // adversary.
  virtual std::optional<RevList> oracle_revoke(const Credential& vc) = 0;
  virtual Blacklist oracle_refresh(Epoch e) = 0;
  // Throws kNoValidCredential when no unexpired credential exists.
  virtual Presentation oracle_genvp(Epoch e, std::uint32_t m, ByteView challenge) = 0;
};

struct ChallengeRequest {
  Bytes challenge0;
  Bytes challenge1;
  Bytes state;  // opaque, passed to the second stage
};

struct GuessInput {
  const Presentation& vp0;
  const Presentation& vp1;
  const IssuerPublicParams& issuer;
  const Blacklist& blacklist;
  const Bytes& state;
  const ProofBackend& backend;
  // Filled only for adversaries that ask for omniscience (sanity checks).
  const std::array<Seed, 2>* seeds = nullptr;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string_view name() const = 0;
  virtual ChallengeRequest query(GameOracles& oracles, RandomSource& rng) = 0;
  // Must return 0 or 1.
  virtual int guess(const GuessInput& in, RandomSource& rng) = 0;
  virtual bool omniscient() const { return false; }
};

using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

// "random", "token-matcher", "replay-prober" or "omniscient".
std::unique_ptr<Adversary> make_adversary(std::string_view name);
const std::vector<std::string>& adversary_names();

// One game instance, seeded; play() runs every phase once.
class UntraceabilityGame final : public GameOracles {
 public:
  UntraceabilityGame(const GameConfig& cfg, const Digest& seed);

  // Returns true when the adversary guessed b. Throws
  // kAdversaryProtocolViolation for malformed adversary output.
  bool play(Adversary& adversary);

  const GameState& state() const { return state_; }

  const IssuerPublicParams& issuer() const override { return public_; }
  RevList revlist() const override { return state_.issuer.revlist; }
  Epoch epoch() const override;
  const ProofBackend& backend() const override { return backend_; }

  Credential oracle_genvc() override;
  std::optional<RevList> oracle_revoke(const Credential& vc) override;
  Blacklist oracle_refresh(Epoch e) override;
  Presentation oracle_genvp(Epoch e, std::uint32_t m, ByteView challenge) override;

 private:
  Credential issue_random_claim();

  GameConfig cfg_;
  SeededRandom rng_;
  RelationCheckBackend backend_;
  GameState state_;
  IssuerPublicParams public_;
};

struct GameReport {
  std::string adversary;
  std::uint32_t trials = 0;
  std::uint32_t wins = 0;
  double success_rate = 0;
  double ci_low = 0;   // 99% acceptance region for a fair coin
  double ci_high = 0;
  bool within_ci() const { return success_rate >= ci_low && success_rate <= ci_high; }
};

// Trials run in parallel; each uses a stream derived from (seed, trial), so
// the report depends only on the arguments.
GameReport run_untraceability_game(const AdversaryFactory& factory, std::uint32_t trials,
                                   std::uint64_t seed, const GameConfig& cfg = {});
GameReport run_untraceability_game(std::string_view adversary, std::uint32_t trials,
                                   std::uint64_t seed, const GameConfig& cfg = {});

// Smallest symmetric count interval [lo, hi] with P(X < lo) <= alpha/2 and
// P(X > hi) <= alpha/2 for X ~ Binomial(n, p), computed exactly.
struct CountInterval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};
CountInterval binomial_acceptance_region(std::uint64_t n, double p, double alpha);

}  // namespace zktoken

#endif  // ZKTOKEN_GAME_H_
