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

// zktoken: command-line front end over a file-backed registry.
//
// Exit codes: 0 success, 1 verification or validation failure, 2 I/O, format
// or configuration error.

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "render.h"
#include "zktoken/backend.h"
#include "zktoken/crypto.h"
#include "zktoken/encoding.h"
#include "zktoken/error.h"
#include "zktoken/game.h"
#include "zktoken/metrics.h"
#include "zktoken/protocol.h"
#include "zktoken/registry.h"

namespace fs = std::filesystem;
using namespace zktoken;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

// Configuration problems detected by the CLI itself (bad flags, missing
// registry, unparsable config files).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kMalformedEncoding:
    case ErrorCode::kUnsupportedConfig:
    case ErrorCode::kNotFound:
    case ErrorCode::kRandomnessUnavailable:
      return kExitConfig;
    default:
      return kExitFailure;
  }
}

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Writes through a temporary file and rename. Secret files are created 0600.
void write_file(const fs::path& path, ByteView data, bool secret) {
  fs::path tmp = path;
  tmp += ".tmp";
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, secret ? 0600 : 0644);
  if (fd < 0) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  if (secret) ::fchmod(fd, 0600);
  std::size_t off = 0;
  while (off < data.size()) {
    ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n <= 0) {
      ::close(fd);
      throw Error(ErrorCode::kIo, "short write to " + tmp.string());
    }
    off += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) {
    throw Error(ErrorCode::kIo, "cannot flush " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename onto " + path.string());
}

template <typename T>
T load(const fs::path& path) {
  return decode_document<T>(read_file(path));
}

template <typename T>
void store(const fs::path& path, const T& value, bool secret) {
  write_file(path, encode_document(value), secret);
}

struct Session {
  Bytes pk;
  Presentation vp;
};

Bytes encode_session(const Session& s) {
  Writer w;
  w.u8(kFormatVersion);
  w.var_bytes(s.pk);
  write(w, s.vp);
  return std::move(w).bytes();
}

Session decode_session(ByteView bytes) {
  Reader r(bytes);
  if (r.u8() != kFormatVersion) malformed("unknown format version");
  Session s;
  s.pk = r.var_bytes();
  read(r, s.vp);
  r.expect_end();
  return s;
}

struct Globals {
  std::string registry;
  std::string backend = "relation-check";
  std::string clock = "system";
  std::string output = "binary";
  std::optional<std::uint64_t> seed;
};

class Context {
 public:
  explicit Context(const Globals& g) : g_(g) {}

  std::int64_t now() const {
    if (g_.clock == "system") return static_cast<std::int64_t>(std::time(nullptr));
    if (g_.clock.rfind("fixed:", 0) == 0) {
      const std::string digits = g_.clock.substr(6);
      try {
        std::size_t used = 0;
        long long v = std::stoll(digits, &used);
        if (used == digits.size()) return v;
      } catch (const std::exception&) {
      }
    }
    throw ConfigError("--clock must be 'system' or 'fixed:<seconds>'");
  }

  // With --seed every command draws from its own deterministic stream.
  std::unique_ptr<RandomSource> rng(std::string_view command) const {
    if (!g_.seed) return std::make_unique<SystemRandom>();
    Digest d = Sha256().u8(tag::kRngStream).u64(*g_.seed).update(as_bytes(command)).finish();
    return std::make_unique<SeededRandom>(d);
  }

  fs::path registry_dir() const {
    if (g_.registry.empty()) {
      throw ConfigError("no registry: pass --registry or set ZKTOKEN_REGISTRY");
    }
    return g_.registry;
  }

  FileRegistry registry() const { return FileRegistry(registry_dir()); }

  BackendId backend_id() const {
    if (g_.backend == "relation-check") return BackendId::kRelationCheck;
    if (g_.backend == "snark") return BackendId::kSnark;
    throw ConfigError("--backend must be 'relation-check' or 'snark'");
  }

  std::unique_ptr<ProofBackend> backend() const {
    BackendId id = backend_id();
    return make_backend(id, std::make_shared<FileEscrow>(registry_dir() / "escrow"));
  }

  bool debug_json() const { return g_.output == "debug-json"; }

  void validate() const {
    if (g_.output != "binary" && g_.output != "debug-json") {
      throw ConfigError("--output must be 'binary' or 'debug-json'");
    }
    backend_id();
    now();
  }

 private:
  const Globals& g_;
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

Bytes parse_pk(const std::string& hex) {
  Bytes pk = from_hex(hex);
  if (pk.empty()) throw Error(ErrorCode::kInvalidArgument, "empty issuer key");
  return pk;
}

RegistryRecord fetch_record(const Registry& registry, ByteView pk) {
  RegistryRecord rec = registry.fetch(pk);
  if (!record_signature_valid(rec)) {
    throw Error(ErrorCode::kBadSignature, "registry record signature does not verify");
  }
  return rec;
}

// ---------------------------------------------------------------------------

struct SetupArgs {
  std::int64_t dur = 86400;
  std::optional<std::int64_t> ts0;
  std::uint32_t k = 1;
  std::uint32_t lambda = 256;
  std::string out;
};

int cmd_setup(const Context& ctx, const SetupArgs& a) {
  SecurityParams params;
  params.lambda = a.lambda;
  EpochParams ep{a.ts0 ? *a.ts0 : ctx.now(), a.dur};
  CircuitConfig cfg;
  cfg.k = a.k;
  params.validate();
  ep.validate();
  cfg.validate();

  auto backend = ctx.backend();
  auto rng = ctx.rng("setup");
  FileRegistry registry = ctx.registry();
  SetupResult s = setup(params, ep, cfg, *backend, *rng);
  store(a.out, s.state, true);
  registry.publish(s.record);
  if (ctx.debug_json()) {
    print_json(cli::render(s.state));
  } else {
    std::cout << to_hex(s.state.keys.pk) << "\n";
  }
  return kExitOk;
}

struct IssueArgs {
  std::string state;
  std::vector<std::string> claims;
  std::uint64_t exp = 0;
  std::string out;
};

int cmd_issue(const Context& ctx, const IssueArgs& a) {
  IssuerState st = load<IssuerState>(a.state);
  Claims claims;
  for (const std::string& c : a.claims) {
    auto eq = c.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "claim '" + c + "' is not label=value");
    }
    claims.add(c.substr(0, eq), std::string_view(c).substr(eq + 1));
  }
  Epoch current = current_epoch(st.epoch_params, ctx.now());
  auto rng = ctx.rng("issue");
  Credential vc = issue(st, std::move(claims), Epoch{a.exp}, current, *rng);
  store(a.out, vc, true);
  if (ctx.debug_json()) print_json(cli::render(vc));
  return kExitOk;
}

int cmd_revoke(const Context& ctx, const std::string& state_path,
               const std::string& credential_path) {
  IssuerState st = load<IssuerState>(state_path);
  Credential vc = load<Credential>(credential_path);
  revoke(st, vc);
  store(state_path, st, true);
  if (ctx.debug_json()) print_json(cli::render(st));
  return kExitOk;
}

int cmd_refresh(const Context& ctx, const std::string& state_path,
                std::optional<std::uint64_t> epoch) {
  IssuerState st = load<IssuerState>(state_path);
  Epoch e = epoch ? Epoch{*epoch} : current_epoch(st.epoch_params, ctx.now());
  FileRegistry registry = ctx.registry();
  Blacklist bl = refresh(st, e);
  RegistryRecord rec = make_record(st, bl);
  registry.publish(rec);
  store(state_path, st, true);
  if (ctx.debug_json()) {
    print_json(cli::render(rec));
  } else {
    std::cout << "epoch " << e.value << " blacklist " << bl.tokens.size() << "\n";
  }
  return kExitOk;
}

struct PresentArgs {
  std::string issuer;
  std::string credential;
  std::uint32_t m = 1;
  std::string challenge;
  std::vector<std::string> disclose;
  std::string out;
};

int cmd_present(const Context& ctx, const PresentArgs& a) {
  Bytes pk = parse_pk(a.issuer);
  Bytes challenge = from_hex(a.challenge);
  Credential vc = load<Credential>(a.credential);
  FileRegistry registry = ctx.registry();
  RegistryRecord rec = fetch_record(registry, pk);

  std::vector<std::uint32_t> disclosure;
  for (const std::string& label : a.disclose) {
    auto idx = vc.claims.index_of(label);
    if (!idx) throw Error(ErrorCode::kInvalidArgument, "credential has no claim '" + label + "'");
    disclosure.push_back(static_cast<std::uint32_t>(*idx));
  }

  Epoch e = current_epoch(rec.issuer.epoch_params, ctx.now());
  auto backend = ctx.backend();
  auto rng = ctx.rng("present");
  Presentation vp = present(rec.issuer, e, vc, a.m, challenge, disclosure, *backend, *rng);
  if (extends_past_expiry(vp)) {
    std::cerr << "warning: presentation covers epochs after the credential expires (exp "
              << vp.exp.value << ")\n";
  }
  store(a.out, vp, false);
  if (ctx.debug_json()) print_json(cli::render(vp));
  return kExitOk;
}

int cmd_request_challenge(const Context& ctx, std::size_t n, const std::string& out) {
  if (n < 16) throw Error(ErrorCode::kInvalidArgument, "challenge must be at least 16 bytes");
  auto rng = ctx.rng("request-challenge");
  std::string hex = to_hex(rng->bytes(n));
  if (!out.empty()) {
    std::string line = hex + "\n";
    write_file(out, as_bytes(line), false);
  }
  std::cout << hex << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string issuer;
  std::string presentation;
  std::uint32_t m = 1;
  std::string challenge;
  std::vector<std::string> trust;
  std::uint32_t tolerance = 0;
  std::string previous_record;
  std::string session_out;
};

int report(Verdict v) {
  std::cout << verdict_name(v) << "\n";
  return v == Verdict::kValid ? kExitOk : kExitFailure;
}

int stale_blacklist(const Error& e) {
  std::cout << "stale-blacklist\n";
  std::cerr << e.what() << "\n";
  return kExitFailure;
}

int cmd_verify(const Context& ctx, const VerifyArgs& a) {
  if (a.tolerance > 1) throw ConfigError("--tolerance must be 0 or 1");
  Bytes pk = parse_pk(a.issuer);
  Bytes challenge = from_hex(a.challenge);
  Presentation vp = load<Presentation>(a.presentation);
  FileRegistry registry = ctx.registry();
  RegistryRecord rec = fetch_record(registry, pk);
  auto backend = ctx.backend();

  VerifierPolicy policy;
  if (!a.trust.empty()) {
    std::set<Bytes> trusted;
    for (const std::string& t : a.trust) trusted.insert(parse_pk(t));
    policy = VerifierPolicy::trusting(std::move(trusted));
  }
  policy.epoch_tolerance = static_cast<std::uint8_t>(a.tolerance);

  std::optional<Blacklist> previous;
  if (!a.previous_record.empty()) {
    RegistryRecord prev = load<RegistryRecord>(a.previous_record);
    if (prev.issuer.pk != pk || !record_signature_valid(prev)) {
      throw Error(ErrorCode::kBadSignature, "previous record is not from this issuer");
    }
    previous = prev.blacklist;
  }

  Epoch e = current_epoch(rec.issuer.epoch_params, ctx.now());
  try {
    Verdict v = verification(rec.issuer, e, rec.blacklist, a.m, vp, challenge, policy, *backend,
                             previous ? &*previous : nullptr);
    if (v == Verdict::kValid && !a.session_out.empty()) {
      write_file(a.session_out, encode_session({pk, vp}), false);
    }
    return report(v);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kBlacklistEpochMismatch) return stale_blacklist(err);
    throw;
  }
}

int cmd_verify_continuous(const Context& ctx, const std::string& session_path) {
  Session s = decode_session(read_file(session_path));
  VerificationSession session = VerificationSession::restore(s.pk, s.vp);
  FileRegistry registry = ctx.registry();
  RegistryRecord rec = fetch_record(registry, s.pk);
  Epoch e = current_epoch(rec.issuer.epoch_params, ctx.now());
  try {
    return report(session.check(e, rec.blacklist));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kSessionExpired) {
      std::cout << "session-expired\n";
      return kExitFailure;
    }
    if (err.code() == ErrorCode::kBlacklistEpochMismatch) return stale_blacklist(err);
    throw;
  }
}

int cmd_fetch(const Context& ctx, const std::string& issuer, const std::string& out) {
  FileRegistry registry = ctx.registry();
  RegistryRecord rec = fetch_record(registry, parse_pk(issuer));
  if (!out.empty()) store(out, rec, false);
  print_json(cli::render(rec));
  return kExitOk;
}

int cmd_inspect(const std::string& kind, const std::string& path) {
  Bytes bytes = read_file(path);
  if (kind == "credential") {
    print_json(cli::render(decode_document<Credential>(bytes)));
  } else if (kind == "presentation") {
    print_json(cli::render(decode_document<Presentation>(bytes)));
  } else if (kind == "record") {
    print_json(cli::render(decode_document<RegistryRecord>(bytes)));
  } else if (kind == "state") {
    print_json(cli::render(decode_document<IssuerState>(bytes)));
  } else if (kind == "session") {
    Session s = decode_session(bytes);
    print_json({{"type", "session"}, {"issuer", to_hex(s.pk)}, {"presentation", cli::render(s.vp)}});
  } else {
    throw ConfigError("--kind must be credential, presentation, record, state or session");
  }
  return kExitOk;
}

struct GameArgs {
  std::string adversary = "random";
  std::uint32_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint32_t k = 1;
  std::uint32_t max_period = 8;
};

int cmd_game(const Context& ctx, const GameArgs& a) {
  const auto& names = adversary_names();
  if (std::find(names.begin(), names.end(), a.adversary) == names.end()) {
    throw ConfigError("unknown adversary '" + a.adversary + "'");
  }
  if (a.trials == 0) throw ConfigError("--trials must be positive");
  GameConfig cfg;
  cfg.k = a.k;
  cfg.max_period = a.max_period;
  GameReport r = run_untraceability_game(a.adversary, a.trials, a.seed, cfg);
  if (ctx.debug_json()) {
    print_json({{"adversary", r.adversary},
                {"trials", r.trials},
                {"wins", r.wins},
                {"success_rate", r.success_rate},
                {"ci_low", r.ci_low},
                {"ci_high", r.ci_high},
                {"within_ci", r.within_ci()}});
  } else {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "adversary=" << r.adversary << " trials=" << r.trials << " wins=" << r.wins
       << " success_rate=" << r.success_rate << " ci=[" << r.ci_low << "," << r.ci_high
       << "] within_ci=" << (r.within_ci() ? "true" : "false");
    std::cout << os.str() << "\n";
  }
  return kExitOk;
}

int cmd_bench(const Context& ctx, const std::string& config_path, bool as_json) {
  BenchConfig cfg;
  try {
    Bytes raw = read_file(config_path);
    cfg = BenchConfig::from_json(nlohmann::json::parse(raw.begin(), raw.end()));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bench config: ") + e.what());
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (ctx.backend_id() != BackendId::kRelationCheck) {
    make_backend(ctx.backend_id(), nullptr);
  }
  // Witnesses stay in memory: a file escrow would write one file per proof.
  RelationCheckBackend backend;
  MemoryRegistry registry;
  MetricsReport report = run_metrics(cfg, registry, backend);
  if (as_json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_csv();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkToken credentials with time-limited continuous verification"};
  app.require_subcommand(1);

  Globals g;
  if (const char* env = std::getenv("ZKTOKEN_REGISTRY")) g.registry = env;
  app.add_option("--registry", g.registry, "Registry directory (default $ZKTOKEN_REGISTRY)");
  app.add_option("--backend", g.backend, "relation-check | snark");
  app.add_option("--clock", g.clock, "system | fixed:<unix seconds>");
  app.add_option("--output", g.output, "binary | debug-json");
  app.add_option("--seed", g.seed, "Deterministic randomness seed");

  int rc = kExitOk;
  Context ctx(g);

  SetupArgs setup_args;
  auto* setup_cmd = app.add_subcommand("setup", "Create an issuer and publish its record");
  setup_cmd->add_option("--dur", setup_args.dur, "Epoch duration in seconds");
  setup_cmd->add_option("--ts0", setup_args.ts0, "Genesis timestamp (default: now)");
  setup_cmd->add_option("--k", setup_args.k, "Tokens per proof");
  setup_cmd->add_option("--lambda", setup_args.lambda, "Security parameter in bits");
  setup_cmd->add_option("--out", setup_args.out, "Issuer state file")->required();
  setup_cmd->callback([&] { rc = cmd_setup(ctx, setup_args); });

  IssueArgs issue_args;
  auto* issue_cmd = app.add_subcommand("issue", "Issue a credential");
  issue_cmd->add_option("--issuer-state", issue_args.state)->required();
  issue_cmd->add_option("--claim", issue_args.claims, "label=value, repeatable");
  issue_cmd->add_option("--exp", issue_args.exp, "Last valid epoch")->required();
  issue_cmd->add_option("--out", issue_args.out, "Credential file")->required();
  issue_cmd->callback([&] { rc = cmd_issue(ctx, issue_args); });

  std::string revoke_state, revoke_vc;
  auto* revoke_cmd = app.add_subcommand("revoke", "Revoke a credential");
  revoke_cmd->add_option("--issuer-state", revoke_state)->required();
  revoke_cmd->add_option("--credential", revoke_vc)->required();
  revoke_cmd->callback([&] { rc = cmd_revoke(ctx, revoke_state, revoke_vc); });

  std::string refresh_state;
  std::optional<std::uint64_t> refresh_epoch;
  auto* refresh_cmd = app.add_subcommand("refresh", "Recompute and publish the blacklist");
  refresh_cmd->add_option("--issuer-state", refresh_state)->required();
  refresh_cmd->add_option("--epoch", refresh_epoch, "Epoch (default: current)");
  refresh_cmd->callback([&] { rc = cmd_refresh(ctx, refresh_state, refresh_epoch); });

  PresentArgs present_args;
  auto* present_cmd = app.add_subcommand("present", "Build a presentation");
  present_cmd->add_option("--issuer", present_args.issuer, "Issuer public key (hex)")->required();
  present_cmd->add_option("--credential", present_args.credential)->required();
  present_cmd->add_option("--m", present_args.m, "Verification period in epochs")->required();
  present_cmd->add_option("--challenge", present_args.challenge, "Verifier challenge (hex)")
      ->required();
  present_cmd->add_option("--disclose", present_args.disclose, "Claim label, repeatable");
  present_cmd->add_option("--out", present_args.out, "Presentation file")->required();
  present_cmd->callback([&] { rc = cmd_present(ctx, present_args); });

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a presentation");
  verify_cmd->require_subcommand(0, 1);
  verify_cmd->add_option("--issuer", verify_args.issuer, "Issuer public key (hex)");
  verify_cmd->add_option("--presentation", verify_args.presentation);
  verify_cmd->add_option("--m", verify_args.m, "Expected verification period");
  verify_cmd->add_option("--challenge", verify_args.challenge, "Challenge sent (hex)");
  verify_cmd->add_option("--trust", verify_args.trust, "Trusted issuer key, repeatable");
  verify_cmd->add_option("--tolerance", verify_args.tolerance, "Epoch tolerance, 0 or 1");
  verify_cmd->add_option("--previous-record", verify_args.previous_record,
                         "Record fetched in the previous epoch (for --tolerance 1)");
  verify_cmd->add_option("--session-out", verify_args.session_out,
                         "Save a session for continuous verification");

  std::size_t challenge_bytes = 32;
  std::string challenge_out;
  auto* request_cmd = verify_cmd->add_subcommand("request-challenge", "Emit a fresh challenge");
  request_cmd->add_option("--bytes", challenge_bytes, "Challenge length (>= 16)");
  request_cmd->add_option("--out", challenge_out, "Also write the hex challenge to a file");
  request_cmd->callback([&] { rc = cmd_request_challenge(ctx, challenge_bytes, challenge_out); });

  std::string session_path;
  auto* continuous_cmd =
      verify_cmd->add_subcommand("continuous", "Re-check a session at the current epoch");
  continuous_cmd->add_option("--session", session_path)->required();
  continuous_cmd->callback([&] { rc = cmd_verify_continuous(ctx, session_path); });

  verify_cmd->callback([&] {
    if (!verify_cmd->get_subcommands().empty()) return;
    if (verify_args.issuer.empty() || verify_args.presentation.empty() ||
        verify_args.challenge.empty()) {
      throw ConfigError("verify needs --issuer, --presentation, --m and --challenge");
    }
    rc = cmd_verify(ctx, verify_args);
  });

  std::string fetch_issuer, fetch_out;
  auto* fetch_cmd = app.add_subcommand("fetch", "Show an issuer's registry record");
  fetch_cmd->add_option("--issuer", fetch_issuer, "Issuer public key (hex)")->required();
  fetch_cmd->add_option("--out", fetch_out, "Also save the encoded record");
  fetch_cmd->callback([&] { rc = cmd_fetch(ctx, fetch_issuer, fetch_out); });

  std::string inspect_kind, inspect_path;
  auto* inspect_cmd = app.add_subcommand("inspect", "Render an encoded file as JSON");
  inspect_cmd->add_option("--kind", inspect_kind,
                          "credential | presentation | record | state | session")
      ->required();
  inspect_cmd->add_option("file", inspect_path)->required();
  inspect_cmd->callback([&] { rc = cmd_inspect(inspect_kind, inspect_path); });

  GameArgs game_args;
  auto* game_cmd = app.add_subcommand("game", "Run the untraceability game");
  game_cmd->add_option("--adversary", game_args.adversary,
                       "random | token-matcher | replay-prober | omniscient");
  game_cmd->add_option("--trials", game_args.trials);
  game_cmd->add_option("--seed", game_args.seed);
  game_cmd->add_option("--k", game_args.k);
  game_cmd->add_option("--max-period", game_args.max_period);
  game_cmd->callback([&] { rc = cmd_game(ctx, game_args); });

  std::string bench_config;
  bool bench_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run the metrics workload");
  bench_cmd->add_option("--config", bench_config, "JSON workload description")->required();
  bench_cmd->add_flag("--json", bench_json, "Structured output instead of CSV");
  bench_cmd->callback([&] { rc = cmd_bench(ctx, bench_config, bench_json); });

  app.parse_complete_callback([&] { ctx.validate(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return rc;
}
