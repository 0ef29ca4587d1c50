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

#ifndef ZKTOKEN_REGISTRY_H_
#define ZKTOKEN_REGISTRY_H_

// Public-read, authenticated-write store with one record per issuer, keyed by
// the issuer public key.

#include <filesystem>
#include <map>
#include <shared_mutex>

#include "zktoken/encoding.h"
#include "zktoken/types.h"

namespace zktoken {

// What an issuer publishes and hands to holders alongside a credential.
struct IssuerPublicParams {
  Bytes pk;
  CommonReferenceString crs;
  EpochParams epoch_params;
  std::uint32_t k = 1;

  bool operator==(const IssuerPublicParams&) const = default;
};

struct RegistryRecord {
  IssuerPublicParams issuer;
  Blacklist blacklist;
  Bytes record_sig;  // by issuer.pk over record_digest()

  bool operator==(const RegistryRecord&) const = default;
};

// H(0x07 || encoded record body), the body being everything but record_sig.
Digest record_digest(const RegistryRecord& record);
RegistryRecord make_signed_record(IssuerPublicParams issuer, Blacklist blacklist,
                                  ByteView sk);
bool record_signature_valid(const RegistryRecord& record);

// The interface is deliberately limited to publish and fetch: there is no way
// to enumerate issuers or observe reads.
class Registry {
 public:
  virtual ~Registry() = default;

  // Atomically replaces the record stored under record.issuer.pk.
  // Throws kBadSignature or kEpochRegression.
  virtual void publish(const RegistryRecord& record) = 0;

  // Throws kNotFound.
  virtual RegistryRecord fetch(ByteView pk) const = 0;
};

class MemoryRegistry final : public Registry {
 public:
  void publish(const RegistryRecord& record) override;
  RegistryRecord fetch(ByteView pk) const override;

 private:
  mutable std::shared_mutex mu_;
  std::map<Bytes, Bytes> records_;  // pk -> encode_document(record)
};

// <dir>/<hex(pk)>.rec holding encode_document(record). Publishes take an
// advisory lock on <dir>/.lock and land via rename, so readers observe
// either the old or the new file.
class FileRegistry final : public Registry {
 public:
  explicit FileRegistry(std::filesystem::path dir);

  void publish(const RegistryRecord& record) override;
  RegistryRecord fetch(ByteView pk) const override;

  std::filesystem::path record_path(ByteView pk) const;

 private:
  std::filesystem::path dir_;
};

void write(Writer& w, const IssuerPublicParams& v);
void write(Writer& w, const RegistryRecord& v);
void read(Reader& r, IssuerPublicParams& v);
void read(Reader& r, RegistryRecord& v);

}  // namespace zktoken

#endif  // ZKTOKEN_REGISTRY_H_
