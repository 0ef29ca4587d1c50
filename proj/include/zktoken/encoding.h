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

#ifndef ZKTOKEN_ENCODING_H_
#define ZKTOKEN_ENCODING_H_

// Canonical binary encoding. Fixed-width integers are little-endian,
// variable-length fields carry an LE32 length prefix, and sets are written in
// ascending order so that equal values always encode to equal bytes.
//
// encode() produces the body of a value. Top-level objects that travel on
// their own (files, registry entries) use encode_document(), which prepends
// the format version byte.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zktoken/bytes.h"
#include "zktoken/error.h"
#include "zktoken/types.h"

namespace zktoken {

inline constexpr std::uint8_t kFormatVersion = 0x01;

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void raw(ByteView bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }
  void var_bytes(ByteView bytes);
  void string(std::string_view s) { var_bytes(as_bytes(s)); }
  void count(std::size_t n);

  const Bytes& bytes() const& { return out_; }
  Bytes bytes() && { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(ByteView in) : in_(in) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  ByteView raw(std::size_t n);
  Bytes var_bytes();
  std::string string();
  Digest digest();
  // A count prefix for a list whose elements each occupy at least
  // min_element_size bytes; rejects counts the remaining input cannot hold.
  std::size_t count(std::size_t min_element_size);

  std::size_t remaining() const { return in_.size() - pos_; }
  void expect_end() const;

 private:
  ByteView in_;
  std::size_t pos_ = 0;
};

[[noreturn]] void malformed(const std::string& what);

void write(Writer& w, const Epoch& v);
void write(Writer& w, const Seed& v);
void write(Writer& w, const Token& v);
void write(Writer& w, const Digest& v);
void write(Writer& w, const Claims& v);
void write(Writer& w, const Credential& v);
void write(Writer& w, const CommonReferenceString& v);
void write(Writer& w, const Proof& v);
void write(Writer& w, const Presentation& v);
void write(Writer& w, const Blacklist& v);
void write(Writer& w, const RevList& v);
void write(Writer& w, const SecurityParams& v);
void write(Writer& w, const EpochParams& v);
void write(Writer& w, const KeyPair& v);

void read(Reader& r, Epoch& v);
void read(Reader& r, Seed& v);
void read(Reader& r, Token& v);
void read(Reader& r, Digest& v);
void read(Reader& r, Claims& v);
void read(Reader& r, Credential& v);
void read(Reader& r, CommonReferenceString& v);
void read(Reader& r, Proof& v);
void read(Reader& r, Presentation& v);
void read(Reader& r, Blacklist& v);
void read(Reader& r, RevList& v);
void read(Reader& r, SecurityParams& v);
void read(Reader& r, EpochParams& v);
void read(Reader& r, KeyPair& v);

template <typename T>
Bytes encode(const T& value) {
  Writer w;
  write(w, value);
  return std::move(w).bytes();
}

template <typename T>
T decode(ByteView bytes) {
  Reader r(bytes);
  T value{};
  read(r, value);
  r.expect_end();
  return value;
}

template <typename T>
Bytes encode_document(const T& value) {
  Writer w;
  w.u8(kFormatVersion);
  write(w, value);
  return std::move(w).bytes();
}

template <typename T>
T decode_document(ByteView bytes) {
  Reader r(bytes);
  if (r.u8() != kFormatVersion) malformed("unknown format version");
  T value{};
  read(r, value);
  r.expect_end();
  return value;
}

template <typename T>
std::size_t size_of_encoding(const T& value) {
  return encode(value).size();
}

}  // namespace zktoken

#endif  // ZKTOKEN_ENCODING_H_
