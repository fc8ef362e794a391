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

#ifndef LWEID_CODEC_HPP
#define LWEID_CODEC_HPP

#include <optional>
#include <string>

#include "lweid/cve.hpp"
#include "lweid/stern.hpp"
#include "lweid/wire.hpp"

namespace lweid {

// Payload layouts for the protocol messages. Parsers return nullopt on any
// shape violation; the session layer maps that to reject("malformed").
// Responses are not self-describing: the reader supplies the challenge it
// issued (live sessions know it; transcript replay reads it from the
// preceding challenge frame).

WireMessage make_stern_commit_msg(const SternCommitMsg& coms);
std::optional<SternCommitMsg> parse_stern_commit_msg(const Params& params, const WireMessage& msg);

WireMessage make_stern_response_msg(const SternResponse& resp);
std::optional<SternResponse> parse_stern_response_msg(const Params& params, int challenge,
                                                      const WireMessage& msg);

WireMessage make_cve_commit_msg(const CveCommitMsg& coms);
std::optional<CveCommitMsg> parse_cve_commit_msg(const Params& params, const WireMessage& msg);

WireMessage make_alpha_msg(Fq blind);
std::optional<Fq> parse_alpha_msg(const Params& params, const WireMessage& msg);

WireMessage make_beta_msg(const FqVector& blinded_sum);
std::optional<FqVector> parse_beta_msg(const Params& params, const WireMessage& msg);

WireMessage make_cve_response_msg(const CveResponse& resp);
std::optional<CveResponse> parse_cve_response_msg(const Params& params, int challenge,
                                                  const WireMessage& msg);

WireMessage make_challenge_msg(MsgType type, int challenge);
std::optional<int> parse_challenge_msg(MsgType expected, int max_challenge,
                                       const WireMessage& msg);

struct KeyAnnounce {
  SchemeId scheme;
  Params params;  // params.rounds carries the session round count
};
WireMessage make_key_msg(const KeyAnnounce& announce);
std::optional<KeyAnnounce> parse_key_msg(const WireMessage& msg);

struct ResultMsg {
  bool success = false;
  Reject reason = Reject::None;
  std::string text;
};
WireMessage make_result_msg(const ResultMsg& result);
std::optional<ResultMsg> parse_result_msg(const WireMessage& msg);

}  // namespace lweid

#endif  // LWEID_CODEC_HPP
