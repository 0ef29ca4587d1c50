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

#include "render.h"

#include "zktoken/crypto.h"

namespace zktoken::cli {
namespace {

using nlohmann::json;

// Values that are printable ASCII are shown as text, anything else as hex.
json render_value(const Bytes& v) {
  for (auto c : v) {
    if (c < 0x20 || c > 0x7e) return {{"hex", to_hex(v)}};
  }
  return std::string(v.begin(), v.end());
}

json render(const Claims& claims) {
  json out = json::array();
  for (const Claim& c : claims.entries()) {
    out.push_back({{"label", c.label}, {"value", render_value(c.value)}});
  }
  return out;
}

json render(const CommonReferenceString& crs) {
  return {{"backend", std::string(backend_name(crs.backend))},
          {"relation_digest", to_hex(crs.relation_digest)},
          {"params_bytes", crs.params.size()}};
}

}  // namespace

json render(const Credential& vc) {
  return {{"type", "credential"},
          {"seed", to_hex(vc.seed.bytes())},
          {"claims", render(vc.claims)},
          {"exp", vc.exp.value},
          {"sig", to_hex(vc.sig)},
          {"encoded_bytes", encode_document(vc).size()}};
}

json render(const Presentation& vp) {
  json tokens = json::array();
  for (const Token& t : vp.tokens) tokens.push_back(to_hex(t.bytes));
  json epochs = json::array();
  for (Epoch e : vp.epochs) epochs.push_back(e.value);
  json disclosed = json::array();
  for (const DisclosedClaim& d : vp.disclosed) {
    disclosed.push_back(
        {{"index", d.index}, {"label", d.claim.label}, {"value", render_value(d.claim.value)}});
  }
  json digests = json::array();
  for (const Digest& d : vp.claim_digests) digests.push_back(to_hex(d));
  json proofs = json::array();
  for (const Proof& p : vp.proofs) {
    proofs.push_back({{"backend", std::string(backend_name(p.backend))}, {"bytes", to_hex(p.bytes)}});
  }
  return {{"type", "presentation"}, {"m", vp.m},
          {"tokens", tokens},       {"epochs", epochs},
          {"h", to_hex(vp.h)},      {"disclosed", disclosed},
          {"claim_digests", digests}, {"exp", vp.exp.value},
          {"proofs", proofs},       {"encoded_bytes", encode_document(vp).size()}};
}

json render(const Blacklist& bl) {
  json tokens = json::array();
  for (const Token& t : bl.tokens) tokens.push_back(to_hex(t.bytes));
  return {{"epoch", bl.epoch.value}, {"size", bl.tokens.size()}, {"tokens", tokens}};
}

json render(const IssuerPublicParams& p) {
  return {{"pk", to_hex(p.pk)},
          {"crs", render(p.crs)},
          {"ts0", p.epoch_params.ts0},
          {"dur", p.epoch_params.dur},
          {"k", p.k}};
}

json render(const RegistryRecord& rec) {
  return {{"type", "registry-record"},
          {"issuer", render(rec.issuer)},
          {"blacklist", render(rec.blacklist)},
          {"record_sig", to_hex(rec.record_sig)},
          {"signature_valid", record_signature_valid(rec)},
          {"encoded_bytes", encode_document(rec).size()}};
}

json render(const IssuerState& st) {
  json revoked = json::array();
  for (const auto& [seed, exp] : st.revlist.entries) {
    revoked.push_back({{"seed", to_hex(seed.bytes())}, {"exp", exp.value}});
  }
  return {{"type", "issuer-state"},
          {"lambda", st.params.lambda},
          {"hash", std::string(hash_name(st.params.hash_id))},
          {"sig", std::string(sig_name(st.params.sig_id))},
          {"public", render(st.public_params())},
          {"revlist", revoked}};
}

}  // namespace zktoken::cli
