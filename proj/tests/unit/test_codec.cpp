/* Copyright 2026 The vrlite Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#include <catch2/catch_amalgamated.hpp>

#include <limits>

#include "support/oracles.hpp"
#include "vrlite/dist/codec.hpp"

using namespace vrlite;
using namespace vrlite::dist;

namespace {

ProtocolMessage random_message(std::size_t d, Rng &rng) {
  std::uniform_int_distribution<int> tag(0, 2);
  std::uniform_int_distribution<std::uint32_t> u32;
  ProtocolMessage m;
  m.tag = static_cast<MessageTag>(tag(rng));
  m.worker_id = u32(rng);
  m.epoch = u32(rng);
  m.v1 = testing::random_vector(d, rng, 1e3);
  m.v2 = testing::random_vector(d, rng, 1e-3);
  m.v3 = testing::random_vector(d, rng);
  return m;
}

ProtocolMessage unit_message(std::size_t d) {
  ProtocolMessage m;
  m.tag = MessageTag::sync_report;
  m.worker_id = 3;
  m.epoch = 7;
  m.v1 = Vector::Constant(static_cast<Eigen::Index>(d), 1.5);
  m.v2 = Vector::Zero(static_cast<Eigen::Index>(d));
  m.v3 = Vector::Constant(static_cast<Eigen::Index>(d), -2.0);
  return m;
}

template <class Fn>
DecodeError capture(Fn &&fn) {
  try {
    fn();
  } catch (const DecodeError &e) {
    return e;
  }
  FAIL("no DecodeError thrown");
  throw;
}

}  // namespace

TEST_CASE("frames round-trip bit-exactly", "[codec][property]") {
  Rng rng(2024);
  for (std::size_t d : {1u, 20u, 1000u}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const ProtocolMessage m = random_message(d, rng);
      const Bytes wire = encode_message(m);
      REQUIRE(wire.size() == kLengthBytes + 9 + 24 * d);
      CHECK(decode_message(wire, d) == m);
    }
  }
}

TEST_CASE("special floating point values survive the wire", "[codec]") {
  ProtocolMessage m = unit_message(4);
  m.v1 << -0.0, std::numeric_limits<double>::infinity(), std::numeric_limits<double>::denorm_min(),
      std::numeric_limits<double>::max();
  const ProtocolMessage back = decode_message(encode_message(m), 4);
  CHECK(std::signbit(back.v1[0]));
  CHECK(back.v1 == m.v1);
}

TEST_CASE("frame layout is little-endian with a leading length", "[codec]") {
  const Bytes wire = encode_message(unit_message(1));
  REQUIRE(wire.size() == 4 + 33);
  CHECK(wire[0] == 33);
  CHECK(wire[1] == 0);
  CHECK(wire[4] == 0);  // sync_report
  CHECK(wire[5] == 3);
  CHECK(wire[9] == 7);
  // 1.5 = 0x3FF8000000000000
  CHECK(wire[13 + 6] == 0xF8);
  CHECK(wire[13 + 7] == 0x3F);
}

TEST_CASE("decoder rejects malformed frames", "[codec]") {
  Bytes wire = encode_message(unit_message(3));

  SECTION("unknown tag") {
    wire[4] = 7;
    const auto e = capture([&] { decode_message(wire, 3); });
    CHECK(e.kind() == DecodeError::Kind::unknown_tag);
    CHECK(e.offset() == 4);
  }
  SECTION("declared length disagrees with the dimension") {
    const auto e = capture([&] { decode_message(wire, 4); });
    CHECK(e.kind() == DecodeError::Kind::length_mismatch);
    CHECK(e.offset() == 0);
  }
  SECTION("corrupted length field") {
    wire[0] ^= 0x01;
    CHECK(capture([&] { decode_message(wire, 3); }).kind() == DecodeError::Kind::length_mismatch);
  }
  SECTION("truncated body") {
    wire.pop_back();
    const auto e = capture([&] { decode_message(wire, 3); });
    CHECK(e.kind() == DecodeError::Kind::truncated);
    CHECK(e.offset() == wire.size());
  }
  SECTION("truncated header") {
    wire.resize(3);
    CHECK(capture([&] { decode_message(wire, 3); }).kind() == DecodeError::Kind::truncated);
  }
  SECTION("trailing bytes") {
    wire.push_back(0);
    const auto e = capture([&] { decode_message(wire, 3); });
    CHECK(e.kind() == DecodeError::Kind::length_mismatch);
    CHECK(e.offset() == wire.size() - 1);
  }
}

TEST_CASE("encoder rejects ragged messages", "[codec]") {
  ProtocolMessage m = unit_message(3);
  m.v2 = Vector::Zero(2);
  CHECK_THROWS_AS(encode_message(m), ProtocolError);
  CHECK_THROWS_AS(require_message(unit_message(3), MessageTag::async_delta, 3), ProtocolError);
  CHECK_THROWS_AS(require_message(unit_message(3), MessageTag::sync_report, 4), ProtocolError);
  CHECK_NOTHROW(require_message(unit_message(3), MessageTag::sync_report, 3));
}

TEST_CASE("handshake frames", "[codec]") {
  for (std::size_t d : {1u, 22u, 100000u}) CHECK(decode_handshake(encode_handshake(d)) == d);
  const Bytes frame = encode_message(unit_message(2));
  CHECK(capture([&] { decode_handshake(frame); }).kind() == DecodeError::Kind::unknown_tag);
  Bytes hs = encode_handshake(5);
  hs.pop_back();
  CHECK(capture([&] { decode_handshake(hs); }).kind() == DecodeError::Kind::truncated);
  // A handshake is never a valid data frame.
  CHECK(capture([&] { decode_message(encode_handshake(5), 5); }).kind() ==
        DecodeError::Kind::unknown_tag);
}
