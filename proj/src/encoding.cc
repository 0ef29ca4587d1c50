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

#include "zktoken/encoding.h"

#include <limits>

namespace zktoken {

void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedEncoding, what);
}

void Writer::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Writer::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Writer::var_bytes(ByteView bytes) {
  count(bytes.size());
  raw(bytes);
}

void Writer::count(std::size_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "field too long to encode");
  }
  u32(static_cast<std::uint32_t>(n));
}

std::uint8_t Reader::u8() { return raw(1)[0]; }

std::uint32_t Reader::u32() {
  ByteView b = raw(4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t Reader::u64() {
  ByteView b = raw(8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

ByteView Reader::raw(std::size_t n) {
  if (n > remaining()) malformed("truncated input");
  ByteView out = in_.subspan(pos_, n);
  pos_ += n;
  return out;
}

Bytes Reader::var_bytes() {
  std::uint32_t n = u32();
  ByteView b = raw(n);
  return Bytes(b.begin(), b.end());
}

std::string Reader::string() {
  std::uint32_t n = u32();
  ByteView b = raw(n);
  return std::string(b.begin(), b.end());
}

Digest Reader::digest() {
  ByteView b = raw(kDigestSize);
  Digest d;
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

std::size_t Reader::count(std::size_t min_element_size) {
  std::uint32_t n = u32();
  if (min_element_size > 0 && n > remaining() / min_element_size) {
    malformed("length prefix exceeds input");
  }
  return n;
}

void Reader::expect_end() const {
  if (remaining() != 0) malformed("trailing bytes");
}

namespace {

BackendId read_backend_id(Reader& r) {
  std::uint8_t id = r.u8();
  if (id != static_cast<std::uint8_t>(BackendId::kRelationCheck) &&
      id != static_cast<std::uint8_t>(BackendId::kSnark)) {
    malformed("unknown backend id");
  }
  return static_cast<BackendId>(id);
}

}  // namespace

void write(Writer& w, const Epoch& v) { w.u64(v.value); }
void read(Reader& r, Epoch& v) { v.value = r.u64(); }

void write(Writer& w, const Seed& v) { w.var_bytes(v.bytes()); }
void read(Reader& r, Seed& v) {
  Bytes b = r.var_bytes();
  if (b.size() < Seed::kMinSize) malformed("seed shorter than 128 bits");
  v = Seed(std::move(b));
}

void write(Writer& w, const Token& v) { w.raw(v.bytes); }
void read(Reader& r, Token& v) { v.bytes = r.digest(); }

void write(Writer& w, const Digest& v) { w.raw(v); }
void read(Reader& r, Digest& v) { v = r.digest(); }

void write(Writer& w, const Claims& v) {
  w.count(v.size());
  for (const Claim& c : v.entries()) {
    w.string(c.label);
    w.var_bytes(c.value);
  }
}

void read(Reader& r, Claims& v) {
  std::size_t n = r.count(8);
  Claims out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = r.string();
    Bytes value = r.var_bytes();
    try {
      out.add(std::move(label), std::move(value));
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  v = std::move(out);
}

void write(Writer& w, const Credential& v) {
  write(w, v.seed);
  write(w, v.claims);
  write(w, v.exp);
  w.var_bytes(v.sig);
}

void read(Reader& r, Credential& v) {
  read(r, v.seed);
  read(r, v.claims);
  read(r, v.exp);
  v.sig = r.var_bytes();
}

void write(Writer& w, const CommonReferenceString& v) {
  w.u8(static_cast<std::uint8_t>(v.backend));
  w.raw(v.relation_digest);
  w.var_bytes(v.params);
}

void read(Reader& r, CommonReferenceString& v) {
  v.backend = read_backend_id(r);
  v.relation_digest = r.digest();
  v.params = r.var_bytes();
}

void write(Writer& w, const Proof& v) {
  w.u8(static_cast<std::uint8_t>(v.backend));
  w.var_bytes(v.bytes);
}

void read(Reader& r, Proof& v) {
  v.backend = read_backend_id(r);
  v.bytes = r.var_bytes();
}

void write(Writer& w, const Presentation& v) {
  w.u32(v.m);
  w.count(v.tokens.size());
  for (const Token& t : v.tokens) write(w, t);
  w.count(v.epochs.size());
  for (const Epoch& e : v.epochs) write(w, e);
  w.raw(v.h);
  w.count(v.disclosed.size());
  for (const DisclosedClaim& d : v.disclosed) {
    w.u32(d.index);
    w.string(d.claim.label);
    w.var_bytes(d.claim.value);
  }
  w.count(v.claim_digests.size());
  for (const Digest& d : v.claim_digests) w.raw(d);
  write(w, v.exp);
  w.count(v.proofs.size());
  for (const Proof& p : v.proofs) write(w, p);
}

void read(Reader& r, Presentation& v) {
  v.m = r.u32();
  if (v.m == 0) malformed("verification period must be positive");
  std::size_t n_tokens = r.count(kDigestSize);
  if (n_tokens != v.m) malformed("token count differs from m");
  v.tokens.resize(n_tokens);
  for (Token& t : v.tokens) read(r, t);
  std::size_t n_epochs = r.count(8);
  if (n_epochs != v.m) malformed("epoch count differs from m");
  v.epochs.resize(n_epochs);
  for (Epoch& e : v.epochs) read(r, e);
  for (std::size_t i = 1; i < v.epochs.size(); ++i) {
    if (v.epochs[i - 1].value == std::numeric_limits<std::uint64_t>::max() ||
        v.epochs[i].value != v.epochs[i - 1].value + 1) {
      malformed("epochs are not consecutive");
    }
  }
  v.h = r.digest();
  std::size_t n_disclosed = r.count(12);
  v.disclosed.resize(n_disclosed);
  for (std::size_t i = 0; i < n_disclosed; ++i) {
    DisclosedClaim& d = v.disclosed[i];
    d.index = r.u32();
    if (i > 0 && d.index <= v.disclosed[i - 1].index) {
      malformed("disclosed claim indices must be strictly increasing");
    }
    d.claim.label = r.string();
    d.claim.value = r.var_bytes();
    try {
      validate_claim_label(d.claim.label);
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  std::size_t n_digests = r.count(kDigestSize);
  v.claim_digests.resize(n_digests);
  for (Digest& d : v.claim_digests) d = r.digest();
  if (!v.disclosed.empty() && v.disclosed.back().index >= n_digests) {
    malformed("disclosed claim index out of range");
  }
  read(r, v.exp);
  std::size_t n_proofs = r.count(5);
  if (n_proofs == 0 || n_proofs > v.m) malformed("bad proof count");
  v.proofs.resize(n_proofs);
  for (Proof& p : v.proofs) read(r, p);
}

void write(Writer& w, const Blacklist& v) {
  write(w, v.epoch);
  w.count(v.tokens.size());
  for (const Token& t : v.tokens) write(w, t);
}

void read(Reader& r, Blacklist& v) {
  read(r, v.epoch);
  std::size_t n = r.count(kDigestSize);
  v.tokens.clear();
  const Token* prev = nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    Token t;
    read(r, t);
    if (prev != nullptr && !(*prev < t)) {
      malformed("blacklist tokens must be strictly ascending");
    }
    prev = &*v.tokens.insert(v.tokens.end(), t);
  }
}

void write(Writer& w, const RevList& v) {
  w.count(v.entries.size());
  for (const auto& [seed, exp] : v.entries) {
    write(w, seed);
    write(w, exp);
  }
}

void read(Reader& r, RevList& v) {
  std::size_t n = r.count(4 + Seed::kMinSize + 8);
  v.entries.clear();
  for (std::size_t i = 0; i < n; ++i) {
    Seed s;
    Epoch e;
    read(r, s);
    read(r, e);
    if (!v.entries.empty() && !(v.entries.rbegin()->first < s)) {
      malformed("revocation list seeds must be strictly ascending");
    }
    v.entries.emplace_hint(v.entries.end(), std::move(s), e);
  }
}

void write(Writer& w, const SecurityParams& v) {
  w.u32(v.lambda);
  w.u8(static_cast<std::uint8_t>(v.hash_id));
  w.u8(static_cast<std::uint8_t>(v.sig_id));
}

void read(Reader& r, SecurityParams& v) {
  v.lambda = r.u32();
  v.hash_id = static_cast<HashId>(r.u8());
  v.sig_id = static_cast<SigId>(r.u8());
  try {
    v.validate();
  } catch (const Error& e) {
    malformed(e.what());
  }
}

void write(Writer& w, const EpochParams& v) {
  w.u64(static_cast<std::uint64_t>(v.ts0));
  w.u64(static_cast<std::uint64_t>(v.dur));
}

void read(Reader& r, EpochParams& v) {
  v.ts0 = static_cast<std::int64_t>(r.u64());
  v.dur = static_cast<std::int64_t>(r.u64());
  try {
    v.validate();
  } catch (const Error& e) {
    malformed(e.what());
  }
}

void write(Writer& w, const KeyPair& v) {
  w.var_bytes(v.sk);
  w.var_bytes(v.pk);
}

void read(Reader& r, KeyPair& v) {
  v.sk = r.var_bytes();
  v.pk = r.var_bytes();
}

}  // namespace zktoken
