#include <filesystem>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "lweid/wire.hpp"

using namespace lweid;
using lweid::test::seed_of;

TEST_CASE("frame layout: empty payload is exactly five bytes") {
  WireMessage m{MsgType::S1Challenge, {}};
  auto bytes = encode_message(m);
  CHECK(bytes.size() == 5);
  CHECK(bytes[0] == 0x02);
  CHECK(decode_message(bytes) == m);
}

TEST_CASE("encode/decode round trip over random messages") {
  const MsgType tags[] = {MsgType::S1Commit,    MsgType::S1Challenge, MsgType::S1Response,
                          MsgType::S2Commit,    MsgType::S2Alpha,     MsgType::S2Beta,
                          MsgType::S2Challenge, MsgType::S2Response,  MsgType::Key,
                          MsgType::Result};
  XofStream xs(seed_of("wire"), Domain::Vector);
  for (int iter = 0; iter < 10000; ++iter) {
    WireMessage m;
    m.type = tags[xs.uniform_below(10)];
    m.payload.resize(xs.uniform_below(200));
    xs.fill(m.payload);
    CHECK(decode_message(encode_message(m)) == m);
  }
}

TEST_CASE("decode rejects malformed frames") {
  WireMessage m{MsgType::S1Commit, {1, 2, 3}};
  auto bytes = encode_message(m);

  SUBCASE("unknown tag") {
    bytes[0] = 0x7f;
    CHECK_THROWS_AS(decode_message(bytes), WireError);
  }
  SUBCASE("declared length larger than body") {
    bytes[4] = 9;
    CHECK_THROWS_AS(decode_message(bytes), WireError);
  }
  SUBCASE("trailing bytes") {
    bytes.push_back(0);
    CHECK_THROWS_AS(decode_message(bytes), WireError);
  }
  SUBCASE("short header") {
    CHECK_THROWS_AS(decode_message(std::span(bytes).first(3)), WireError);
  }
  SUBCASE("oversize declared length") {
    bytes[1] = 0xff;
    bytes[2] = 0xff;
    CHECK_THROWS_AS(decode_message(bytes), WireError);
  }
}

namespace {

TranscriptFile sample_file() {
  TranscriptFile file;
  file.params = lweid::test::small_params();
  RoundTranscript t;
  t.scheme_id = 1;
  t.verdict = 1;
  t.messages.push_back({MsgType::S1Commit, {1, 2, 3, 4}});
  t.messages.push_back({MsgType::S1Challenge, {2}});
  t.messages.push_back({MsgType::S1Response, {9, 9}});
  file.transcripts.push_back(t);
  t.verdict = 0;
  file.transcripts.push_back(t);
  return file;
}

}  // namespace

TEST_CASE("transcript file round trip") {
  auto path = std::filesystem::temp_directory_path() / "lweid_wire_test.bin";
  TranscriptFile file = sample_file();
  save_transcripts(path, file);
  TranscriptFile loaded = load_transcripts(path);
  CHECK(loaded.params.n == file.params.n);
  CHECK(loaded.params.sigma == file.params.sigma);
  CHECK(loaded.transcripts == file.transcripts);
  std::filesystem::remove(path);
}

TEST_CASE("transcript serialization is byte-stable") {
  CHECK(serialize_transcripts(sample_file()) == serialize_transcripts(sample_file()));
}

TEST_CASE("transcript file rejects corruption") {
  auto bytes = serialize_transcripts(sample_file());

  SUBCASE("bad magic") {
    bytes[0] = 'X';
    CHECK_THROWS_AS(deserialize_transcripts(bytes), FileFormatError);
  }
  SUBCASE("bad version") {
    bytes[4] = 0x7f;
    CHECK_THROWS_AS(deserialize_transcripts(bytes), FileFormatError);
  }
  SUBCASE("truncated") {
    bytes.resize(bytes.size() - 3);
    CHECK_THROWS_AS(deserialize_transcripts(bytes), FileFormatError);
  }
  SUBCASE("trailing garbage") {
    bytes.push_back(0);
    CHECK_THROWS_AS(deserialize_transcripts(bytes), FileFormatError);
  }
}
