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

#include "zktoken/metrics.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "zktoken/crypto.h"
#include "zktoken/error.h"
#include "zktoken/protocol.h"

namespace zktoken {
namespace {

template <typename F>
double median_micros(std::uint32_t runs, F&& body) {
  std::vector<double> samples;
  samples.reserve(runs);
  for (std::uint32_t i = 0; i < runs; ++i) {
    auto start = std::chrono::steady_clock::now();
    body();
    auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  std::size_t mid = samples.size() / 2;
  return samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
}

std::string format_value(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "bench config: " + what);
}

}  // namespace

BenchConfig::BenchConfig() {
  for (std::uint32_t m = 1; m <= 60; ++m) m_values.push_back(m);
}

std::uint64_t BenchConfig::total_revocations() const {
  return static_cast<std::uint64_t>(std::llround(revocation_rate * static_cast<double>(n)));
}

double BenchConfig::revocations_per_epoch() const {
  return revocation_rate * static_cast<double>(n) / epochs;
}

std::uint64_t BenchConfig::revoked_through(std::uint32_t t) const {
  return (static_cast<std::uint64_t>(t) + 1) * total_revocations() / epochs;
}

void BenchConfig::validate() const {
  if (n == 0) bad_config("n must be positive");
  if (!(revocation_rate >= 0 && revocation_rate <= 1)) bad_config("R must be in [0, 1]");
  if (epochs == 0) bad_config("epochs must be positive");
  if (timing_runs == 0) bad_config("timing_runs must be positive");
  if (k_values.empty()) bad_config("k_values must not be empty");
  for (auto m : m_values) {
    if (m == 0) bad_config("m values must be positive");
  }
  for (auto k : k_values) {
    if (k == 0) bad_config("k values must be positive");
  }
}

BenchConfig BenchConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_config("expected a JSON object");
  static const std::set<std::string> known = {"n",        "revocation_rate", "epochs",
                                              "m_values", "k_values",        "timing_runs",
                                              "seed",     "r"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) bad_config("unknown key '" + key + "'");
  }
  BenchConfig cfg;
  try {
    if (j.contains("n")) cfg.n = j.at("n").get<std::uint64_t>();
    if (j.contains("revocation_rate")) cfg.revocation_rate = j.at("revocation_rate").get<double>();
    if (j.contains("epochs")) cfg.epochs = j.at("epochs").get<std::uint32_t>();
    if (j.contains("m_values")) cfg.m_values = j.at("m_values").get<std::vector<std::uint32_t>>();
    if (j.contains("k_values")) cfg.k_values = j.at("k_values").get<std::vector<std::uint32_t>>();
    if (j.contains("timing_runs")) cfg.timing_runs = j.at("timing_runs").get<std::uint32_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.validate();
    if (j.contains("r")) {
      double r = j.at("r").get<double>();
      if (std::fabs(r - cfg.revocations_per_epoch()) > 1.0) {
        bad_config("r is inconsistent with R * n / epochs");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    bad_config(e.what());
  }
  return cfg;
}

std::vector<const MetricRow*> MetricsReport::select(std::string_view metric) const {
  std::vector<const MetricRow*> out;
  for (const MetricRow& r : rows) {
    if (r.metric == metric) out.push_back(&r);
  }
  return out;
}

std::string MetricsReport::to_csv() const {
  std::ostringstream os;
  os << "metric,epoch,backend,k,m,value,unit\n";
  for (const MetricRow& r : rows) {
    os << r.metric << ',';
    if (r.epoch) os << *r.epoch;
    os << ',' << r.backend << ',';
    if (r.k) os << *r.k;
    os << ',';
    if (r.m) os << *r.m;
    os << ',' << format_value(r.value) << ',' << r.unit << '\n';
  }
  return os.str();
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const MetricRow& r : rows) {
    nlohmann::json row = {{"metric", r.metric}, {"backend", r.backend},
                          {"value", r.value},   {"unit", r.unit}};
    row["epoch"] = r.epoch ? nlohmann::json(*r.epoch) : nlohmann::json(nullptr);
    row["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
    row["m"] = r.m ? nlohmann::json(*r.m) : nlohmann::json(nullptr);
    out.push_back(std::move(row));
  }
  return out;
}

MetricsReport run_metrics(const BenchConfig& cfg, Registry& registry,
                          const ProofBackend& backend) {
  cfg.validate();
  MetricsReport report;
  const std::string backend_id(backend_name(backend.id()));
  SeededRandom rng = SeededRandom::from_u64(cfg.seed);
  const EpochParams epoch_params{0, 86400};
  const Epoch last{cfg.epochs - 1u};

  auto add = [&](std::string metric, std::optional<std::uint64_t> epoch,
                 std::optional<std::uint32_t> k, std::optional<std::uint32_t> m, double value,
                 std::string unit) {
    report.rows.push_back({std::move(metric), epoch, backend_id, k, m, value, std::move(unit)});
  };

  // Issuer side: n credentials valid for the whole horizon, a constant
  // revocation rate, one refresh and publication per epoch.
  {
    SetupResult s = setup(SecurityParams{}, epoch_params, CircuitConfig{}, backend, rng);
    IssuerState& issuer = s.state;
    registry.publish(s.record);

    std::vector<Credential> issued;
    issued.reserve(cfg.n);
    for (std::uint64_t i = 0; i < cfg.n; ++i) {
      Claims claims;
      claims.add("employee", std::to_string(i));
      issued.push_back(issue(issuer, std::move(claims), last, Epoch{0}, rng));
    }

    std::uint64_t revoked = 0;
    for (std::uint32_t t = 0; t < cfg.epochs; ++t) {
      for (std::uint64_t target = cfg.revoked_through(t); revoked < target; ++revoked) {
        revoke(issuer, issued[revoked]);
      }
      Blacklist bl;
      double refresh_us =
          median_micros(cfg.timing_runs, [&] { bl = refresh(issuer, Epoch{t}); });
      RegistryRecord record = make_record(issuer, bl);
      registry.publish(record);
      RegistryRecord stored = registry.fetch(issuer.keys.pk);

      add("revlist_size", t, std::nullopt, std::nullopt,
          static_cast<double>(issuer.revlist.size()), "count");
      add("issuer_bandwidth", t, std::nullopt, std::nullopt,
          static_cast<double>(encode_document(record).size()), "bytes");
      add("refresh_time", t, std::nullopt, std::nullopt, refresh_us, "us");
      add("registry_blacklist_bytes", t, std::nullopt, std::nullopt,
          static_cast<double>(size_of_encoding(stored.blacklist)), "bytes");
      add("registry_record_bytes", t, std::nullopt, std::nullopt,
          static_cast<double>(encode_document(stored).size()), "bytes");
    }
  }

  // Holder and proof side, per batch size k.
  for (std::uint32_t k : cfg.k_values) {
    CircuitConfig circuit;
    circuit.k = k;
    double setup_us = median_micros(cfg.timing_runs, [&] {
      backend.setup(SecurityParams{}, circuit);
    });
    SetupResult s = setup(SecurityParams{}, epoch_params, circuit, backend, rng);
    registry.publish(s.record);
    IssuerPublicParams pub = s.state.public_params();
    add("crs_size", std::nullopt, k, std::nullopt,
        static_cast<double>(size_of_encoding(pub.crs)), "bytes");
    add("setup_time", std::nullopt, k, std::nullopt, setup_us, "us");

    Claims claims;
    claims.add("employer", "ACME");
    claims.add("role", "engineer");
    Credential vc = issue(s.state, std::move(claims), last, Epoch{0}, rng);

    for (std::uint32_t m : cfg.m_values) {
      Bytes challenge = rng.bytes(32);
      Presentation vp;
      double prove_us = median_micros(cfg.timing_runs, [&] {
        vp = present(pub, Epoch{0}, vc, m, challenge, {}, backend, rng);
      });
      Verdict v = Verdict::kValid;
      double verify_us = median_micros(cfg.timing_runs, [&] {
        v = verify_proofs(pub, m, vp, challenge, backend);
      });
      if (v != Verdict::kValid) {
        throw Error(ErrorCode::kInvalidArgument,
                    "benchmark presentation failed to verify: " + std::string(verdict_name(v)));
      }
      std::size_t proof_bytes = 0;
      for (const Proof& p : vp.proofs) proof_bytes += size_of_encoding(p);

      add("holder_bandwidth", std::nullopt, k, m,
          static_cast<double>(encode_document(vp).size()), "bytes");
      add("holder_proof_bytes", std::nullopt, k, m, static_cast<double>(proof_bytes), "bytes");
      add("proof_count", std::nullopt, k, m, static_cast<double>(vp.proofs.size()), "count");
      add("proof_size", std::nullopt, k, m, static_cast<double>(size_of_encoding(vp.proofs[0])),
          "bytes");
      add("prove_time", std::nullopt, k, m, prove_us, "us");
      add("verify_time", std::nullopt, k, m, verify_us, "us");
    }
  }
  return report;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "fit needs two or more paired points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0;
  f.intercept = my - f.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double e = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += e * e;
  }
  f.r2 = syy > 0 ? 1 - ss_res / syy : 1;
  return f;
}

}  // namespace zktoken
