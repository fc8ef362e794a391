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

#include "lweid/wire.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace lweid {

bool is_known_tag(uint8_t tag) {
  switch (static_cast<MsgType>(tag)) {
    case MsgType::S1Commit:
    case MsgType::S1Challenge:
    case MsgType::S1Response:
    case MsgType::S2Commit:
    case MsgType::S2Alpha:
    case MsgType::S2Beta:
    case MsgType::S2Challenge:
    case MsgType::S2Response:
    case MsgType::Key:
    case MsgType::Result:
      return true;
  }
  return false;
}

std::vector<uint8_t> encode_message(const WireMessage& msg) {
  if (msg.payload.size() > kMaxPayloadBytes)
    throw WireError(WireError::Kind::Oversize, "wire: payload too large");
  std::vector<uint8_t> out;
  out.reserve(kFrameHeaderBytes + msg.payload.size());
  out.push_back(static_cast<uint8_t>(msg.type));
  uint32_t len = static_cast<uint32_t>(msg.payload.size());
  out.push_back(static_cast<uint8_t>(len >> 24));
  out.push_back(static_cast<uint8_t>(len >> 16));
  out.push_back(static_cast<uint8_t>(len >> 8));
  out.push_back(static_cast<uint8_t>(len));
  out.insert(out.end(), msg.payload.begin(), msg.payload.end());
  return out;
}

std::pair<MsgType, size_t> decode_frame_header(std::span<const uint8_t, kFrameHeaderBytes> header) {
  uint8_t tag = header[0];
  if (!is_known_tag(tag)) throw WireError(WireError::Kind::BadTag, "wire: unknown message tag");
  uint32_t len = uint32_t(header[1]) << 24 | uint32_t(header[2]) << 16 | uint32_t(header[3]) << 8 |
                 uint32_t(header[4]);
  if (len > kMaxPayloadBytes)
    throw WireError(WireError::Kind::Oversize, "wire: declared payload too large");
  return {static_cast<MsgType>(tag), len};
}

WireMessage decode_message(std::span<const uint8_t> bytes) {
  if (bytes.size() < kFrameHeaderBytes)
    throw WireError(WireError::Kind::Truncated, "wire: frame shorter than header");
  auto [tag, len] = decode_frame_header(bytes.first<kFrameHeaderBytes>());
  if (bytes.size() < kFrameHeaderBytes + len)
    throw WireError(WireError::Kind::Truncated, "wire: truncated payload");
  if (bytes.size() > kFrameHeaderBytes + len)
    throw WireError(WireError::Kind::Trailing, "wire: trailing bytes after frame");
  WireMessage msg;
  msg.type = tag;
  msg.payload.assign(bytes.begin() + kFrameHeaderBytes, bytes.end());
  return msg;
}

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>(v >> 8));
}
void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

bool get_u16(std::span<const uint8_t> in, size_t& off, uint16_t& v) {
  if (in.size() - off < 2) return false;
  v = uint16_t(in[off]) | uint16_t(in[off + 1]) << 8;
  off += 2;
  return true;
}
bool get_u32(std::span<const uint8_t> in, size_t& off, uint32_t& v) {
  if (in.size() - off < 4) return false;
  v = 0;
  for (int i = 3; i >= 0; --i) v = v << 8 | in[off + size_t(i)];
  off += 4;
  return true;
}
bool get_u64(std::span<const uint8_t> in, size_t& off, uint64_t& v) {
  if (in.size() - off < 8) return false;
  v = 0;
  for (int i = 7; i >= 0; --i) v = v << 8 | in[off + size_t(i)];
  off += 8;
  return true;
}

}  // namespace

void append_params_block(std::vector<uint8_t>& out, const Params& params) {
  put_u16(out, params.n);
  put_u16(out, params.m);
  put_u16(out, params.q);
  put_u64(out, std::bit_cast<uint64_t>(params.sigma));
  put_u32(out, params.rounds);
  put_u16(out, params.seed_len);
  put_u16(out, params.com_len);
}

bool read_params_block(std::span<const uint8_t> in, size_t& offset, Params& out) {
  uint64_t sigma_bits = 0;
  if (!get_u16(in, offset, out.n) || !get_u16(in, offset, out.m) || !get_u16(in, offset, out.q) ||
      !get_u64(in, offset, sigma_bits) || !get_u32(in, offset, out.rounds) ||
      !get_u16(in, offset, out.seed_len) || !get_u16(in, offset, out.com_len))
    return false;
  out.sigma = std::bit_cast<double>(sigma_bits);
  return true;
}

std::vector<uint8_t> serialize_transcripts(const TranscriptFile& file) {
  std::vector<uint8_t> out = {'L', 'W', 'I', 'D', kFileVersion};
  append_params_block(out, file.params);
  put_u32(out, static_cast<uint32_t>(file.transcripts.size()));
  for (const RoundTranscript& t : file.transcripts) {
    out.push_back(t.scheme_id);
    out.push_back(t.verdict);
    put_u32(out, static_cast<uint32_t>(t.messages.size()));
    for (const WireMessage& m : t.messages) {
      auto frame = encode_message(m);
      out.insert(out.end(), frame.begin(), frame.end());
    }
  }
  return out;
}

TranscriptFile deserialize_transcripts(std::span<const uint8_t> bytes) {
  if (bytes.size() < 5 || std::memcmp(bytes.data(), "LWID", 4) != 0)
    throw FileFormatError("transcript file: bad magic");
  if (bytes[4] != kFileVersion) throw FileFormatError("transcript file: unsupported version");
  size_t off = 5;
  TranscriptFile file;
  if (!read_params_block(bytes, off, file.params))
    throw FileFormatError("transcript file: short params block");
  uint32_t count = 0;
  if (!get_u32(bytes, off, count)) throw FileFormatError("transcript file: missing count");
  file.transcripts.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    RoundTranscript t;
    if (bytes.size() - off < 2) throw FileFormatError("transcript file: short round header");
    t.scheme_id = bytes[off++];
    t.verdict = bytes[off++];
    uint32_t nmsgs = 0;
    if (!get_u32(bytes, off, nmsgs)) throw FileFormatError("transcript file: short round header");
    for (uint32_t k = 0; k < nmsgs; ++k) {
      if (bytes.size() - off < kFrameHeaderBytes)
        throw FileFormatError("transcript file: corrupt frame");
      auto header = bytes.subspan(off, kFrameHeaderBytes);
      MsgType tag;
      size_t len;
      try {
        std::tie(tag, len) = decode_frame_header(header.first<kFrameHeaderBytes>());
      } catch (const WireError& e) {
        throw FileFormatError(std::string("transcript file: ") + e.what());
      }
      if (bytes.size() - off < kFrameHeaderBytes + len)
        throw FileFormatError("transcript file: corrupt frame");
      WireMessage m;
      m.type = tag;
      m.payload.assign(bytes.begin() + off + kFrameHeaderBytes,
                       bytes.begin() + off + kFrameHeaderBytes + len);
      off += kFrameHeaderBytes + len;
      t.messages.push_back(std::move(m));
    }
    file.transcripts.push_back(std::move(t));
  }
  if (off != bytes.size()) throw FileFormatError("transcript file: trailing bytes");
  return file;
}

void save_transcripts(const std::filesystem::path& path, const TranscriptFile& file) {
  auto bytes = serialize_transcripts(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileFormatError("transcript file: cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!out) throw FileFormatError("transcript file: write failed: " + path.string());
}

TranscriptFile load_transcripts(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("transcript file: cannot open: " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_transcripts(bytes);
}

}  // namespace lweid
