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

#ifndef ZKTOKEN_METRICS_H_
#define ZKTOKEN_METRICS_H_

// Desk-scale workload driver emitting the size and timing metrics of the
// scheme: holder bandwidth, issuer bandwidth and refresh time per epoch,
// registry storage, proof size and prove/verify time, CRS size and setup
// time.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "zktoken/backend.h"
#include "zktoken/registry.h"

namespace zktoken {

struct BenchConfig {
  std::uint64_t n = 10'000;             // issued credentials
  double revocation_rate = 0.01;        // R
  std::uint32_t epochs = 365;           // horizon
  std::vector<std::uint32_t> m_values;  // default 1..60
  std::vector<std::uint32_t> k_values{1};
  std::uint32_t timing_runs = 30;
  std::uint64_t seed = 1;

  BenchConfig();

  // Total revocations over the horizon, round(R * n).
  std::uint64_t total_revocations() const;
  // r = R * n / epochs (fractional in scaled workloads).
  double revocations_per_epoch() const;
  // |RevList| after the refresh of epoch t: floor((t + 1) * total / epochs),
  // i.e. a constant revocation rate with integer rounding.
  std::uint64_t revoked_through(std::uint32_t t) const;

  void validate() const;

  // Keys: n, revocation_rate, epochs, m_values, k_values, timing_runs, seed,
  // and optionally r (checked against R * n / epochs). Throws
  // kInvalidArgument on anything malformed.
  static BenchConfig from_json(const nlohmann::json& j);
};

struct MetricRow {
  std::string metric;
  std::optional<std::uint64_t> epoch;
  std::string backend;
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> m;
  double value = 0;
  std::string unit;
};

struct MetricsReport {
  std::vector<MetricRow> rows;

  std::vector<const MetricRow*> select(std::string_view metric) const;
  // Header "metric,epoch,backend,k,m,value,unit", one line per row.
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

// Runs the workload against the given registry and backend. Sizes are exact
// byte counts; timings are medians over cfg.timing_runs monotonic-clock runs.
MetricsReport run_metrics(const BenchConfig& cfg, Registry& registry,
                          const ProofBackend& backend);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace zktoken

#endif  // ZKTOKEN_METRICS_H_
