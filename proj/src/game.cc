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

#include "zktoken/game.h"

#include <algorithm>
#include <cmath>
#include <exception>

#include "zktoken/crypto.h"
#include "zktoken/encoding.h"
#include "zktoken/error.h"

namespace zktoken {
namespace {

constexpr std::size_t kChallengeBytes = 32;

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::kAdversaryProtocolViolation, what);
}

ChallengeRequest fresh_challenges(RandomSource& rng) {
  return {rng.bytes(kChallengeBytes), rng.bytes(kChallengeBytes), {}};
}

class RandomAdversary final : public Adversary {
 public:
  std::string_view name() const override { return "random"; }
  ChallengeRequest query(GameOracles&, RandomSource& rng) override {
    return fresh_challenges(rng);
  }
  int guess(const GuessInput&, RandomSource& rng) override { return rng.coin() ? 1 : 0; }
};

// Looks for either presentation's tokens in the post-challenge blacklist.
// A1 first checks, with a credential of its own, that revoked tokens do show
// up in the blacklist of the epoch they were derived for.
class TokenMatcher final : public Adversary {
 public:
  std::string_view name() const override { return "token-matcher"; }

  ChallengeRequest query(GameOracles& o, RandomSource& rng) override {
    Credential mine = o.oracle_genvc();
    o.oracle_genvc();
    o.oracle_revoke(mine);
    Epoch e = o.epoch();
    Blacklist bl = o.oracle_refresh(e);
    ChallengeRequest req = fresh_challenges(rng);
    req.state.push_back(bl.contains(hash_token(mine.seed, e)) ? 1 : 0);
    return req;
  }

  int guess(const GuessInput& in, RandomSource& rng) override {
    auto hits = [&](const Presentation& vp) {
      return std::count_if(vp.tokens.begin(), vp.tokens.end(),
                           [&](const Token& t) { return in.blacklist.contains(t); });
    };
    auto h0 = hits(in.vp0);
    auto h1 = hits(in.vp1);
    if (h0 > 0 && h1 == 0) return 0;
    if (h1 > 0 && h0 == 0) return 1;
    return rng.coin() ? 1 : 0;
  }
};

// Acts as a verifier: collects honest presentations under the challenge
// strings during the query phase, then in the guess phase re-runs
// verification of vp0 and vp1 at the current epoch (including cross-replays
// under the other challenge) and guesses from any difference in outcome.
class ReplayProber final : public Adversary {
 public:
  std::string_view name() const override { return "replay-prober"; }

  ChallengeRequest query(GameOracles& o, RandomSource& rng) override {
    ChallengeRequest req = fresh_challenges(rng);
    Epoch e = o.epoch();
    Presentation probe = o.oracle_genvp(e, 2, req.challenge0);
    Verdict v = verification(o.issuer(), e, o.oracle_refresh(e), probe.m, probe,
                             req.challenge1, VerifierPolicy::trust_everyone(), o.backend());
    Writer w;
    w.var_bytes(req.challenge0);
    w.var_bytes(req.challenge1);
    w.u8(v == Verdict::kValid ? 1 : 0);  // a successful replay would show here
    req.state = std::move(w).bytes();
    return req;
  }

  int guess(const GuessInput& in, RandomSource& rng) override {
    Reader r(in.state);
    Bytes c0 = r.var_bytes();
    Bytes c1 = r.var_bytes();
    auto policy = VerifierPolicy::trust_everyone();
    const Epoch e = in.blacklist.epoch;
    auto score = [&](const Presentation& vp, const Bytes& own, const Bytes& other) {
      int s = 0;
      Verdict v = verification(in.issuer, e, in.blacklist, vp.m, vp, own, policy, in.backend);
      if (v == Verdict::kRevoked) s += 2;
      Verdict replay =
          verification(in.issuer, e, in.blacklist, vp.m, vp, other, policy, in.backend);
      if (replay == Verdict::kRevoked) s += 1;
      return s;
    };
    int s0 = score(in.vp0, c0, c1);
    int s1 = score(in.vp1, c1, c0);
    if (s0 > s1) return 0;
    if (s1 > s0) return 1;
    return rng.coin() ? 1 : 0;
  }
};

// Sanity inversion: told the two seeds, it recomputes the current tokens.
class OmniscientAdversary final : public Adversary {
 public:
  std::string_view name() const override { return "omniscient"; }
  bool omniscient() const override { return true; }
  ChallengeRequest query(GameOracles&, RandomSource& rng) override {
    return fresh_challenges(rng);
  }
  int guess(const GuessInput& in, RandomSource& rng) override {
    if (in.seeds == nullptr) violation("omniscient adversary without seeds");
    bool r0 = in.blacklist.contains(hash_token((*in.seeds)[0], in.blacklist.epoch));
    bool r1 = in.blacklist.contains(hash_token((*in.seeds)[1], in.blacklist.epoch));
    if (r0 != r1) return r0 ? 0 : 1;
    return rng.coin() ? 1 : 0;
  }
};

double log_binomial_pmf(std::uint64_t n, std::uint64_t x, double p) {
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(x) + 1) -
         std::lgamma(static_cast<double>(n - x) + 1) + static_cast<double>(x) * std::log(p) +
         static_cast<double>(n - x) * std::log1p(-p);
}

}  // namespace

std::unique_ptr<Adversary> make_adversary(std::string_view name) {
  if (name == "random") return std::make_unique<RandomAdversary>();
  if (name == "token-matcher") return std::make_unique<TokenMatcher>();
  if (name == "replay-prober") return std::make_unique<ReplayProber>();
  if (name == "omniscient") return std::make_unique<OmniscientAdversary>();
  throw Error(ErrorCode::kInvalidArgument, "unknown adversary: " + std::string(name));
}

const std::vector<std::string>& adversary_names() {
  static const std::vector<std::string> names = {"random", "token-matcher", "replay-prober",
                                                 "omniscient"};
  return names;
}

UntraceabilityGame::UntraceabilityGame(const GameConfig& cfg, const Digest& seed)
    : cfg_(cfg), rng_(seed) {
  if (cfg_.honest_holders < 2 || cfg_.max_period == 0) {
    throw Error(ErrorCode::kInvalidArgument, "game needs two honest holders and m >= 1");
  }
  CircuitConfig circuit;
  circuit.k = cfg_.k;
  SetupResult s = setup(SecurityParams{}, cfg_.epoch_params, circuit, backend_, rng_);
  state_.issuer = std::move(s.state);
  public_ = state_.issuer.public_params();
  state_.now = cfg_.epoch_params.ts0 +
               static_cast<std::int64_t>(rng_.uniform(static_cast<std::uint64_t>(
                   cfg_.epoch_params.dur)));
  for (std::uint32_t i = 0; i < cfg_.honest_holders; ++i) {
    state_.q_h.push_back(issue_random_claim());
  }
}

Epoch UntraceabilityGame::epoch() const {
  return current_epoch(cfg_.epoch_params, state_.now);
}

Credential UntraceabilityGame::issue_random_claim() {
  Claims claims;
  claims.add("bit", Bytes{static_cast<std::uint8_t>(rng_.coin() ? 1 : 0)});
  Epoch e = epoch();
  return issue(state_.issuer, std::move(claims), e + cfg_.validity_epochs, e, rng_);
}

Credential UntraceabilityGame::oracle_genvc() {
  Credential vc = issue_random_claim();
  state_.q_c.push_back(vc);
  return vc;
}

std::optional<RevList> UntraceabilityGame::oracle_revoke(const Credential& vc) {
  if (std::find(state_.q_c.begin(), state_.q_c.end(), vc) == state_.q_c.end()) {
    return std::nullopt;
  }
  revoke(state_.issuer, vc);
  if (std::find(state_.q_r.begin(), state_.q_r.end(), vc) == state_.q_r.end()) {
    state_.q_r.push_back(vc);
  }
  return state_.issuer.revlist;
}

Blacklist UntraceabilityGame::oracle_refresh(Epoch e) {
  return refresh(state_.issuer, e, Execution::kSerial);
}

Presentation UntraceabilityGame::oracle_genvp(Epoch e, std::uint32_t m, ByteView challenge) {
  if (m == 0) violation("GenVP with m = 0");
  std::vector<const Credential*> valid;
  for (const auto* set : {&state_.q_h, &state_.q_c}) {
    for (const Credential& vc : *set) {
      if (vc.exp >= e) valid.push_back(&vc);
    }
  }
  if (valid.empty()) throw Error(ErrorCode::kNoValidCredential, "no unexpired credential");
  const Credential& vc = *valid[rng_.uniform(valid.size())];
  Presentation vp = present(public_, e, vc, m, challenge, {}, backend_, rng_, Execution::kSerial);
  state_.q_p.push_back(vp);
  return vp;
}

bool UntraceabilityGame::play(Adversary& adversary) {
  // Query phase.
  ChallengeRequest req = adversary.query(*this, rng_);
  if (req.challenge0.size() < kMinChallengeSize || req.challenge1.size() < kMinChallengeSize) {
    violation("challenges must be at least 16 bytes");
  }

  // Challenge phase: two distinct honest credentials never shown to A1.
  std::size_t i0 = rng_.uniform(state_.q_h.size());
  std::size_t i1 = rng_.uniform(state_.q_h.size() - 1);
  if (i1 >= i0) ++i1;
  const Credential vc0 = state_.q_h[i0];
  const Credential vc1 = state_.q_h[i1];
  auto m0 = static_cast<std::uint32_t>(1 + rng_.uniform(cfg_.max_period));
  auto m1 = static_cast<std::uint32_t>(1 + rng_.uniform(cfg_.max_period));
  Epoch e = epoch();
  Presentation vp0 =
      present(public_, e, vc0, m0, req.challenge0, {}, backend_, rng_, Execution::kSerial);
  Presentation vp1 =
      present(public_, e, vc1, m1, req.challenge1, {}, backend_, rng_, Execution::kSerial);

  // Wait out the longer verification period on the simulated clock.
  state_.now += static_cast<std::int64_t>(std::max(m0, m1)) * cfg_.epoch_params.dur;
  const int b = rng_.coin() ? 1 : 0;
  revoke(state_.issuer, b == 0 ? vc0 : vc1);
  Blacklist after = refresh(state_.issuer, epoch(), Execution::kSerial);

  // Guess phase.
  std::array<Seed, 2> seeds{vc0.seed, vc1.seed};
  GuessInput in{vp0, vp1, public_, after, req.state, backend_,
                adversary.omniscient() ? &seeds : nullptr};
  int guess = adversary.guess(in, rng_);
  if (guess != 0 && guess != 1) violation("guess must be 0 or 1");
  return guess == b;
}

GameReport run_untraceability_game(const AdversaryFactory& factory, std::uint32_t trials,
                                   std::uint64_t seed, const GameConfig& cfg) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  SeededRandom root = SeededRandom::from_u64(seed);
  std::uint32_t wins = 0;
  std::string name;
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic) reduction(+ : wins)
  for (std::int64_t t = 0; t < n; ++t) {
    try {
      auto adversary = factory();
      UntraceabilityGame game(cfg, root.derive(static_cast<std::uint64_t>(t)));
      if (game.play(*adversary)) ++wins;
      if (t == 0) name = std::string(adversary->name());
    } catch (...) {
#pragma omp critical(zktoken_game_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  GameReport report;
  report.adversary = name;
  report.trials = trials;
  report.wins = wins;
  report.success_rate = static_cast<double>(wins) / trials;
  CountInterval ci = binomial_acceptance_region(trials, 0.5, 0.01);
  report.ci_low = static_cast<double>(ci.lo) / trials;
  report.ci_high = static_cast<double>(ci.hi) / trials;
  return report;
}

GameReport run_untraceability_game(std::string_view adversary, std::uint32_t trials,
                                   std::uint64_t seed, const GameConfig& cfg) {
  make_adversary(adversary);  // validate the name up front
  std::string name(adversary);
  return run_untraceability_game([name] { return make_adversary(name); }, trials, seed, cfg);
}

CountInterval binomial_acceptance_region(std::uint64_t n, double p, double alpha) {
  if (n == 0 || p <= 0 || p >= 1 || alpha <= 0 || alpha >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "bad binomial parameters");
  }
  const double tail = alpha / 2;
  CountInterval out{0, n};
  double acc = 0;
  for (std::uint64_t x = 0; x <= n; ++x) {
    acc += std::exp(log_binomial_pmf(n, x, p));
    if (acc > tail) {
      out.lo = x;
      break;
    }
  }
  acc = 0;
  for (std::uint64_t x = n;; --x) {
    acc += std::exp(log_binomial_pmf(n, x, p));
    if (acc > tail) {
      out.hi = x;
      break;
    }
    if (x == 0) break;
  }
  return out;
}

}  // namespace zktoken
