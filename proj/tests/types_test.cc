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

#include "zktoken/types.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "zktoken/error.h"
#include "zktoken/protocol.h"

namespace zktoken {
namespace {

TEST(SecurityParams, Validation) {
  SecurityParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(p.seed_bytes(), 32u);
  p.lambda = 120;
  EXPECT_THROW(p.validate(), Error);
  p.lambda = 130;
  EXPECT_THROW(p.validate(), Error);
  p.lambda = 128;
  EXPECT_NO_THROW(p.validate());
  p.hash_id = static_cast<HashId>(9);
  EXPECT_THROW(p.validate(), Error);
}

TEST(EpochParams, Validation) {
  EXPECT_NO_THROW((EpochParams{0, 1}.validate()));
  EXPECT_THROW((EpochParams{0, 0}.validate()), Error);
  EXPECT_THROW((EpochParams{0, -5}.validate()), Error);
  EXPECT_THROW((EpochParams{-1, 60}.validate()), Error);
}

TEST(Seed, MinimumLength) {
  EXPECT_THROW(Seed(Bytes(15)), Error);
  EXPECT_NO_THROW(Seed(Bytes(16)));
}

TEST(Claims, LabelRules) {
  Claims c;
  c.add("name", "alice");
  EXPECT_THROW(c.add("name", "bob"), Error);
  EXPECT_THROW(c.add("", "x"), Error);
  EXPECT_THROW(c.add(std::string("a\0b", 3), "x"), Error);
  EXPECT_THROW(c.add("\xff\xfe", "x"), Error);
  EXPECT_THROW(c.add("\xc3", "x"), Error);  // truncated sequence
  EXPECT_NO_THROW(c.add("\xc3\xa9tat", "x"));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.index_of("\xc3\xa9tat"), 1u);
  EXPECT_FALSE(c.index_of("missing").has_value());
}

TEST(Claims, ValuesMayHoldArbitraryBytes) {
  Claims c;
  EXPECT_NO_THROW(c.add("bin", Bytes{0, 0xff, 0}));
  EXPECT_EQ(c[0].value.size(), 3u);
}

TEST(CurrentEpoch, MatchesFrozenRationalVectors) {
  auto lines = testing::read_vectors("epoch.txt");
  ASSERT_GE(lines.size(), 200u);
  for (const auto& v : lines) {
    EpochParams p{std::stoll(v.in[0]), std::stoll(v.in[1])};
    EXPECT_EQ(current_epoch(p, std::stoll(v.in[2])).value, std::stoull(v.out[0]))
        << v.in[0] << " " << v.in[1] << " " << v.in[2];
  }
}

TEST(CurrentEpoch, Boundaries) {
  EpochParams p{1000, 60};
  EXPECT_EQ(current_epoch(p, 1000).value, 0u);
  EXPECT_EQ(current_epoch(p, 1059).value, 0u);
  EXPECT_EQ(current_epoch(p, 1060).value, 1u);
  try {
    current_epoch(p, 999);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kClockBeforeGenesis);
  }
}

TEST(CurrentEpoch, ExtremeTimestampsDoNotOverflow) {
  EpochParams p{0, 1};
  EXPECT_EQ(current_epoch(p, std::numeric_limits<std::int64_t>::max()).value,
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()));
  EpochParams late{std::numeric_limits<std::int64_t>::max(), 1};
  EXPECT_EQ(current_epoch(late, std::numeric_limits<std::int64_t>::max()).value, 0u);
  EXPECT_THROW(current_epoch(p, -1), Error);
}

TEST(ErrorCodes, MessageCarriesCodeName) {
  Error e(ErrorCode::kExpInPast, "exp before current epoch");
  EXPECT_EQ(e.code(), ErrorCode::kExpInPast);
  EXPECT_NE(std::string(e.what()).find("ExpInPast"), std::string::npos);
}

}  // namespace
}  // namespace zktoken
