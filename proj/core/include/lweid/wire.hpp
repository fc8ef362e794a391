// Copyright 2026 The lweid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LWEID_WIRE_HPP
#define LWEID_WIRE_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "lweid/params.hpp"

namespace lweid {

/// Frame layout, bit-exact: 1 tag byte, 4-byte big-endian payload length,
/// payload.
enum class MsgType : uint8_t {
  S1Commit = 0x01,
  S1Challenge = 0x02,
  S1Response = 0x03,
  S2Commit = 0x13,
  S2Alpha = 0x14,
  S2Beta = 0x15,
  S2Challenge = 0x16,
  S2Response = 0x17,
  Key = 0x20,
  Result = 0x30,
};

bool is_known_tag(uint8_t tag);

struct WireMessage {
  MsgType type;
  std::vector<uint8_t> payload;

  friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

class WireError : public std::runtime_error {
 public:
  enum class Kind { BadTag, Truncated, Trailing, Oversize };
  WireError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline constexpr size_t kFrameHeaderBytes = 5;
inline constexpr size_t kMaxPayloadBytes = 1u << 20;

std::vector<uint8_t> encode_message(const WireMessage& msg);
/// Decodes exactly one frame occupying the whole buffer; throws WireError
/// on unknown tag, truncation, over-long declared length, or trailing bytes.
WireMessage decode_message(std::span<const uint8_t> bytes);
/// Header fields for streaming reads: returns (tag, payload length) after
/// validating both.
std::pair<MsgType, size_t> decode_frame_header(std::span<const uint8_t, kFrameHeaderBytes> header);

/// Messages of one protocol round in pass order, plus the verifier verdict
/// (1 accepted, 0 rejected).
struct RoundTranscript {
  uint8_t scheme_id = 0;
  std::vector<WireMessage> messages;
  uint8_t verdict = 0;

  friend bool operator==(const RoundTranscript&, const RoundTranscript&) = default;
};

/// Transcript file: magic "LWID", version 0x01, params block, then the
/// framed messages grouped per round.
struct TranscriptFile {
  Params params;
  std::vector<RoundTranscript> transcripts;

  friend bool operator==(const TranscriptFile&, const TranscriptFile&) = default;
};

class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr uint8_t kFileVersion = 0x01;

void append_params_block(std::vector<uint8_t>& out, const Params& params);
bool read_params_block(std::span<const uint8_t> in, size_t& offset, Params& out);

std::vector<uint8_t> serialize_transcripts(const TranscriptFile& file);
TranscriptFile deserialize_transcripts(std::span<const uint8_t> bytes);
void save_transcripts(const std::filesystem::path& path, const TranscriptFile& file);
TranscriptFile load_transcripts(const std::filesystem::path& path);

}  // namespace lweid

#endif  // LWEID_WIRE_HPP
