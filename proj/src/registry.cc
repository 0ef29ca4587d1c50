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

#include "zktoken/registry.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <iterator>
#include <mutex>

#include "zktoken/crypto.h"
#include "zktoken/error.h"

namespace zktoken {
namespace {

Bytes record_body(const RegistryRecord& record) {
  Writer w;
  write(w, record.issuer);
  write(w, record.blacklist);
  return std::move(w).bytes();
}

void check_publishable(const RegistryRecord& record,
                       const std::optional<RegistryRecord>& stored) {
  if (!record_signature_valid(record)) {
    throw Error(ErrorCode::kBadSignature, "record signature does not verify");
  }
  if (stored && record.blacklist.epoch < stored->blacklist.epoch) {
    throw Error(ErrorCode::kEpochRegression,
                "blacklist epoch " + std::to_string(record.blacklist.epoch.value) +
                    " is older than stored epoch " +
                    std::to_string(stored->blacklist.epoch.value));
  }
}

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path)
      : fd_(::open(path.c_str(), O_RDWR | O_CREAT, 0644)) {
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) {
      if (fd_ >= 0) ::close(fd_);
      throw Error(ErrorCode::kIo, "cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

std::optional<Bytes> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

Digest record_digest(const RegistryRecord& record) {
  return Sha256().u8(tag::kRecord).update(record_body(record)).finish();
}

RegistryRecord make_signed_record(IssuerPublicParams issuer, Blacklist blacklist,
                                  ByteView sk) {
  RegistryRecord r{std::move(issuer), std::move(blacklist), {}};
  r.record_sig = sign(sk, record_digest(r));
  return r;
}

bool record_signature_valid(const RegistryRecord& record) {
  return verify(record.issuer.pk, record.record_sig, record_digest(record));
}

void MemoryRegistry::publish(const RegistryRecord& record) {
  Bytes encoded = encode_document(record);
  std::unique_lock lock(mu_);
  std::optional<RegistryRecord> stored;
  if (auto it = records_.find(record.issuer.pk); it != records_.end()) {
    stored = decode_document<RegistryRecord>(it->second);
  }
  check_publishable(record, stored);
  records_.insert_or_assign(record.issuer.pk, std::move(encoded));
}

RegistryRecord MemoryRegistry::fetch(ByteView pk) const {
  std::shared_lock lock(mu_);
  auto it = records_.find(Bytes(pk.begin(), pk.end()));
  if (it == records_.end()) {
    throw Error(ErrorCode::kNotFound, "no record for issuer " + to_hex(pk));
  }
  return decode_document<RegistryRecord>(it->second);
}

FileRegistry::FileRegistry(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create registry dir: " + ec.message());
}

std::filesystem::path FileRegistry::record_path(ByteView pk) const {
  return dir_ / (to_hex(pk) + ".rec");
}

void FileRegistry::publish(const RegistryRecord& record) {
  FileLock lock(dir_ / ".lock");
  auto path = record_path(record.issuer.pk);
  std::optional<RegistryRecord> stored;
  if (auto bytes = read_file(path)) stored = decode_document<RegistryRecord>(*bytes);
  check_publishable(record, stored);

  Bytes encoded = encode_document(record);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(encoded.data()),
              static_cast<std::streamsize>(encoded.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot replace " + path.string() + ": " + ec.message());
}

RegistryRecord FileRegistry::fetch(ByteView pk) const {
  auto bytes = read_file(record_path(pk));
  if (!bytes) throw Error(ErrorCode::kNotFound, "no record for issuer " + to_hex(pk));
  return decode_document<RegistryRecord>(*bytes);
}

void write(Writer& w, const IssuerPublicParams& v) {
  w.var_bytes(v.pk);
  write(w, v.crs);
  write(w, v.epoch_params);
  w.u32(v.k);
}

void read(Reader& r, IssuerPublicParams& v) {
  v.pk = r.var_bytes();
  read(r, v.crs);
  read(r, v.epoch_params);
  v.k = r.u32();
  if (v.k == 0) malformed("k must be positive");
}

void write(Writer& w, const RegistryRecord& v) {
  write(w, v.issuer);
  write(w, v.blacklist);
  w.var_bytes(v.record_sig);
}

void read(Reader& r, RegistryRecord& v) {
  read(r, v.issuer);
  read(r, v.blacklist);
  v.record_sig = r.var_bytes();
}

}  // namespace zktoken
