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

#include "lweid/codec.hpp"

namespace lweid {

namespace {

void put_seed(std::vector<uint8_t>& out, const Seed& seed) {
  out.insert(out.end(), seed.bytes.begin(), seed.bytes.end());
}

bool get_seed(std::span<const uint8_t> in, size_t& off, size_t seed_bytes, Seed& out) {
  if (in.size() - off < seed_bytes) return false;
  out.bytes.assign(in.begin() + off, in.begin() + off + seed_bytes);
  off += seed_bytes;
  return true;
}

bool get_vector(std::span<const uint8_t> in, size_t& off, size_t len, uint16_t q, FqVector& out) {
  if (in.size() - off < 2 * len) return false;
  if (!FqVector::from_bytes(in.subspan(off, 2 * len), len, q, out)) return false;
  off += 2 * len;
  return true;
}

bool get_digest(std::span<const uint8_t> in, size_t& off, size_t len, Commitment& out) {
  if (in.size() - off < len) return false;
  out.digest.assign(in.begin() + off, in.begin() + off + len);
  off += len;
  return true;
}

}  // namespace

std::vector<uint8_t> SternCommitMsg::concat_digests() const {
  std::vector<uint8_t> out;
  out.reserve(c1.digest.size() * 3);
  out.insert(out.end(), c1.digest.begin(), c1.digest.end());
  out.insert(out.end(), c2.digest.begin(), c2.digest.end());
  out.insert(out.end(), c3.digest.begin(), c3.digest.end());
  return out;
}

std::vector<uint8_t> CveCommitMsg::concat_digests() const {
  std::vector<uint8_t> out;
  out.reserve(c1.digest.size() * 2);
  out.insert(out.end(), c1.digest.begin(), c1.digest.end());
  out.insert(out.end(), c2.digest.begin(), c2.digest.end());
  return out;
}

WireMessage make_stern_commit_msg(const SternCommitMsg& coms) {
  return {MsgType::S1Commit, coms.concat_digests()};
}

std::optional<SternCommitMsg> parse_stern_commit_msg(const Params& params, const WireMessage& msg) {
  if (msg.type != MsgType::S1Commit) return std::nullopt;
  const size_t cb = params.com_bytes();
  if (msg.payload.size() != 3 * cb) return std::nullopt;
  SternCommitMsg out;
  size_t off = 0;
  get_digest(msg.payload, off, cb, out.c1);
  get_digest(msg.payload, off, cb, out.c2);
  get_digest(msg.payload, off, cb, out.c3);
  return out;
}

WireMessage make_stern_response_msg(const SternResponse& resp) {
  WireMessage msg{MsgType::S1Response, {}};
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, SternResponse1>) {
          put_seed(msg.payload, r.open_r1);
          put_seed(msg.payload, r.open_r2);
          r.masked_secret.append_bytes(msg.payload);
          put_seed(msg.payload, r.iso_scale_seed);
          put_seed(msg.payload, r.iso_perm_seed);
        } else if constexpr (std::is_same_v<T, SternResponse2>) {
          put_seed(msg.payload, r.open_r2);
          put_seed(msg.payload, r.open_r3);
          r.masked_image.append_bytes(msg.payload);
          r.error_image.append_bytes(msg.payload);
        } else {
          put_seed(msg.payload, r.open_r1);
          put_seed(msg.payload, r.open_r3);
          put_seed(msg.payload, r.iso_scale_seed);
          put_seed(msg.payload, r.iso_perm_seed);
          put_seed(msg.payload, r.mask_seed);
        }
      },
      resp);
  return msg;
}

std::optional<SternResponse> parse_stern_response_msg(const Params& params, int challenge,
                                                      const WireMessage& msg) {
  if (msg.type != MsgType::S1Response) return std::nullopt;
  const size_t sb = params.seed_bytes();
  size_t off = 0;
  switch (challenge) {
    case 1: {
      SternResponse1 r;
      if (!get_seed(msg.payload, off, sb, r.open_r1)) return std::nullopt;
      if (!get_seed(msg.payload, off, sb, r.open_r2)) return std::nullopt;
      if (!get_vector(msg.payload, off, params.m, params.q, r.masked_secret)) return std::nullopt;
      if (!get_seed(msg.payload, off, sb, r.iso_scale_seed)) return std::nullopt;
      if (!get_seed(msg.payload, off, sb, r.iso_perm_seed)) return std::nullopt;
      if (off != msg.payload.size()) return std::nullopt;
      return SternResponse(std::move(r));
    }
    case 2: {
      SternResponse2 r;
      if (!get_seed(msg.payload, off, sb, r.open_r2)) return std::nullopt;
      if (!get_seed(msg.payload, off, sb, r.open_r3)) return std::nullopt;
      if (!get_vector(msg.payload, off, params.n, params.q, r.masked_image)) return std::nullopt;
      if (!get_vector(msg.payload, off, params.n, params.q, r.error_image)) return std::nullopt;
      if (off != msg.payload.size()) return std::nullopt;
      return SternResponse(std::move(r));
    }
    case 3: {
      SternResponse3 r;
      if (!get_seed(msg.payload, off, sb, r.open_r1)) return std::nullopt;
      if (!get_seed(msg.payload, off, sb, r.open_r3)) return std::nullopt;
      if (!get_seed(msg.payload, off, sb, r.iso_scale_seed)) return std::nullopt;
      if (!get_seed(msg.payload, off, sb, r.iso_perm_seed)) return std::nullopt;
      if (!get_seed(msg.payload, off, sb, r.mask_seed)) return std::nullopt;
      if (off != msg.payload.size()) return std::nullopt;
      return SternResponse(std::move(r));
    }
    default:
      return std::nullopt;
  }
}

WireMessage make_cve_commit_msg(const CveCommitMsg& coms) {
  return {MsgType::S2Commit, coms.concat_digests()};
}

std::optional<CveCommitMsg> parse_cve_commit_msg(const Params& params, const WireMessage& msg) {
  if (msg.type != MsgType::S2Commit) return std::nullopt;
  const size_t cb = params.com_bytes();
  if (msg.payload.size() != 2 * cb) return std::nullopt;
  CveCommitMsg out;
  size_t off = 0;
  get_digest(msg.payload, off, cb, out.c1);
  get_digest(msg.payload, off, cb, out.c2);
  return out;
}

WireMessage make_alpha_msg(Fq blind) {
  WireMessage msg{MsgType::S2Alpha, {}};
  msg.payload.push_back(static_cast<uint8_t>(blind & 0xff));
  msg.payload.push_back(static_cast<uint8_t>(blind >> 8));
  return msg;
}

std::optional<Fq> parse_alpha_msg(const Params& params, const WireMessage& msg) {
  if (msg.type != MsgType::S2Alpha || msg.payload.size() != 2) return std::nullopt;
  uint16_t v = uint16_t(msg.payload[0]) | uint16_t(msg.payload[1]) << 8;
  if (v >= params.q) return std::nullopt;
  return static_cast<Fq>(v);
}

WireMessage make_beta_msg(const FqVector& blinded_sum) {
  return {MsgType::S2Beta, blinded_sum.to_bytes()};
}

std::optional<FqVector> parse_beta_msg(const Params& params, const WireMessage& msg) {
  if (msg.type != MsgType::S2Beta) return std::nullopt;
  FqVector out;
  size_t off = 0;
  if (!get_vector(msg.payload, off, params.n, params.q, out)) return std::nullopt;
  if (off != msg.payload.size()) return std::nullopt;
  return out;
}

WireMessage make_cve_response_msg(const CveResponse& resp) {
  WireMessage msg{MsgType::S2Response, {}};
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CveResponse1>) {
          put_seed(msg.payload, r.open_r1);
          put_seed(msg.payload, r.iso_scale_seed);
          put_seed(msg.payload, r.iso_perm_seed);
        } else {
          put_seed(msg.payload, r.open_r2);
          r.error_image.append_bytes(msg.payload);
        }
      },
      resp);
  return msg;
}

std::optional<CveResponse> parse_cve_response_msg(const Params& params, int challenge,
                                                  const WireMessage& msg) {
  if (msg.type != MsgType::S2Response) return std::nullopt;
  const size_t sb = params.seed_bytes();
  size_t off = 0;
  if (challenge == 1) {
    CveResponse1 r;
    if (!get_seed(msg.payload, off, sb, r.open_r1)) return std::nullopt;
    if (!get_seed(msg.payload, off, sb, r.iso_scale_seed)) return std::nullopt;
    if (!get_seed(msg.payload, off, sb, r.iso_perm_seed)) return std::nullopt;
    if (off != msg.payload.size()) return std::nullopt;
    return CveResponse(std::move(r));
  }
  if (challenge == 2) {
    CveResponse2 r;
    if (!get_seed(msg.payload, off, sb, r.open_r2)) return std::nullopt;
    if (!get_vector(msg.payload, off, params.n, params.q, r.error_image)) return std::nullopt;
    if (off != msg.payload.size()) return std::nullopt;
    return CveResponse(std::move(r));
  }
  return std::nullopt;
}

WireMessage make_challenge_msg(MsgType type, int challenge) {
  return {type, {static_cast<uint8_t>(challenge)}};
}

std::optional<int> parse_challenge_msg(MsgType expected, int max_challenge,
                                       const WireMessage& msg) {
  if (msg.type != expected || msg.payload.size() != 1) return std::nullopt;
  int ch = msg.payload[0];
  if (ch < 1 || ch > max_challenge) return std::nullopt;
  return ch;
}

WireMessage make_key_msg(const KeyAnnounce& announce) {
  WireMessage msg{MsgType::Key, {}};
  msg.payload.push_back(static_cast<uint8_t>(announce.scheme));
  append_params_block(msg.payload, announce.params);
  return msg;
}

std::optional<KeyAnnounce> parse_key_msg(const WireMessage& msg) {
  if (msg.type != MsgType::Key || msg.payload.empty()) return std::nullopt;
  KeyAnnounce out;
  uint8_t scheme = msg.payload[0];
  if (scheme != static_cast<uint8_t>(SchemeId::Stern) &&
      scheme != static_cast<uint8_t>(SchemeId::Cve))
    return std::nullopt;
  out.scheme = static_cast<SchemeId>(scheme);
  size_t off = 1;
  if (!read_params_block(msg.payload, off, out.params)) return std::nullopt;
  if (off != msg.payload.size()) return std::nullopt;
  return out;
}

WireMessage make_result_msg(const ResultMsg& result) {
  WireMessage msg{MsgType::Result, {}};
  msg.payload.push_back(result.success ? 1 : 0);
  msg.payload.push_back(static_cast<uint8_t>(result.reason));
  msg.payload.insert(msg.payload.end(), result.text.begin(), result.text.end());
  return msg;
}

std::optional<ResultMsg> parse_result_msg(const WireMessage& msg) {
  if (msg.type != MsgType::Result || msg.payload.size() < 2) return std::nullopt;
  ResultMsg out;
  if (msg.payload[0] > 1) return std::nullopt;
  out.success = msg.payload[0] == 1;
  out.reason = static_cast<Reject>(msg.payload[1]);
  out.text.assign(msg.payload.begin() + 2, msg.payload.end());
  return out;
}

}  // namespace lweid
