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

#ifndef ZKTOKEN_TESTS_GOLDEN_FIXTURES_H_
#define ZKTOKEN_TESTS_GOLDEN_FIXTURES_H_

// Deterministic objects whose encodings are pinned under tests/golden/.
// Changing anything here, or anything they encode, changes the wire format.

#include <cstdlib>
#include <fstream>
#include <string>

#include "zktoken/backend.h"
#include "zktoken/protocol.h"
#include "zktoken/registry.h"

namespace zktoken::golden {

struct Objects {
  Credential credential;
  Presentation presentation;
  RegistryRecord record;
};

inline Objects build() {
  SeededRandom rng = SeededRandom::from_u64(0x601de);
  RelationCheckBackend backend;
  CircuitConfig cfg;
  cfg.k = 2;
  SetupResult s = setup(SecurityParams{}, EpochParams{1'700'000'000, 86400}, cfg, backend, rng);
  IssuerState& issuer = s.state;

  Claims claims;
  claims.add("name", "alice");
  claims.add("role", "engineer");
  claims.add("clearance", "3");
  Credential vc = issue(issuer, claims, Epoch{400}, Epoch{0}, rng);
  Credential other = issue(issuer, Claims{}, Epoch{400}, Epoch{0}, rng);
  revoke(issuer, other);
  Blacklist bl = refresh(issuer, Epoch{3}, Execution::kSerial);

  Bytes challenge(32);
  for (std::size_t i = 0; i < challenge.size(); ++i) challenge[i] = static_cast<std::uint8_t>(i);
  const std::uint32_t disclose[] = {1};
  Presentation vp = present(issuer.public_params(), Epoch{3}, vc, 3, challenge, disclose,
                            backend, rng, Execution::kSerial);
  return {vc, vp, make_record(issuer, bl)};
}

inline std::string path(const std::string& name) {
  return std::string(ZKTOKEN_GOLDEN_DIR) + "/" + name + ".hex";
}

inline std::string read_hex(const std::string& name) {
  std::ifstream in(path(name));
  std::string hex;
  in >> hex;
  return hex;
}

inline bool update_requested() {
  const char* v = std::getenv("ZKTOKEN_UPDATE_GOLDEN");
  return v != nullptr && std::string(v) == "1";
}

inline void write_hex(const std::string& name, const std::string& hex) {
  std::ofstream(path(name)) << hex << "\n";
}

}  // namespace zktoken::golden

#endif  // ZKTOKEN_TESTS_GOLDEN_FIXTURES_H_
