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

#include "lweid/session.hpp"

#include <stdexcept>

#include "lweid/codec.hpp"
#include "lweid/log.hpp"

namespace lweid {

TcpMessageChannel::TcpMessageChannel(TcpStream stream) : stream_(std::move(stream)) {
  stream_.set_recv_timeout(kMessageTimeout);
}

void TcpMessageChannel::send(const WireMessage& msg) { stream_.send_all(encode_message(msg)); }

WireMessage TcpMessageChannel::recv() {
  std::array<uint8_t, kFrameHeaderBytes> header;
  stream_.recv_exact(header);
  auto [tag, len] = decode_frame_header(std::span<const uint8_t, kFrameHeaderBytes>(header));
  WireMessage msg;
  msg.type = tag;
  msg.payload.resize(len);
  if (len > 0) stream_.recv_exact(msg.payload);
  return msg;
}

namespace {

bool params_compatible(const Params& a, const Params& b) {
  return a.n == b.n && a.m == b.m && a.q == b.q && a.seed_len == b.seed_len &&
         a.com_len == b.com_len;
}

struct RoundFailure {
  Reject reason;
};

// One verifier round; records the exchanged messages and throws
// RoundFailure on any reject.
void verifier_round_stern(MessageChannel& channel, const Params& params, const SternPublicKey& pk,
                          XofStream& challenges, const CommitmentScheme& com,
                          RoundTranscript& tape) {
  WireMessage commit_msg = channel.recv();
  tape.messages.push_back(commit_msg);
  auto coms = parse_stern_commit_msg(params, commit_msg);
  if (!coms) throw RoundFailure{Reject::Malformed};

  int ch = int(challenges.uniform_below(3)) + 1;
  WireMessage ch_msg = make_challenge_msg(MsgType::S1Challenge, ch);
  channel.send(ch_msg);
  tape.messages.push_back(ch_msg);

  WireMessage resp_msg = channel.recv();
  tape.messages.push_back(resp_msg);
  auto resp = parse_stern_response_msg(params, ch, resp_msg);
  if (!resp) throw RoundFailure{Reject::Malformed};

  CheckResult check = stern_verifier_check(params, pk, *coms, ch, *resp, com);
  if (!check) throw RoundFailure{check.reason};
}

void verifier_round_cve(MessageChannel& channel, const Params& params, const CvePublicKey& pk,
                        XofStream& challenges, const CommitmentScheme& com,
                        RoundTranscript& tape) {
  WireMessage commit_msg = channel.recv();
  tape.messages.push_back(commit_msg);
  auto coms = parse_cve_commit_msg(params, commit_msg);
  if (!coms) throw RoundFailure{Reject::Malformed};

  Fq blind = challenges.uniform_mod(params.q);
  WireMessage alpha_msg = make_alpha_msg(blind);
  channel.send(alpha_msg);
  tape.messages.push_back(alpha_msg);

  WireMessage beta_msg = channel.recv();
  tape.messages.push_back(beta_msg);
  auto blinded_sum = parse_beta_msg(params, beta_msg);
  if (!blinded_sum) throw RoundFailure{Reject::Malformed};

  int ch = int(challenges.uniform_below(2)) + 1;
  WireMessage ch_msg = make_challenge_msg(MsgType::S2Challenge, ch);
  channel.send(ch_msg);
  tape.messages.push_back(ch_msg);

  WireMessage resp_msg = channel.recv();
  tape.messages.push_back(resp_msg);
  auto resp = parse_cve_response_msg(params, ch, resp_msg);
  if (!resp) throw RoundFailure{Reject::Malformed};

  CheckResult check = cve_verifier_check(params, pk, *coms, blind, *blinded_sum, ch, *resp, com);
  if (!check) throw RoundFailure{check.reason};
}

void send_result_best_effort(MessageChannel& channel, const ResultMsg& result) {
  try {
    channel.send(make_result_msg(result));
  } catch (const NetError&) {
    // peer already gone; the local verdict stands
  }
}

}  // namespace

VerifierOutcome run_verifier_session(MessageChannel& channel, const KeyFile& key, uint32_t rounds,
                                     const Seed& challenge_seed, bool capture) {
  Params params = key.params;
  params.rounds = rounds;
  HashCommitment com(params);
  XofStream challenges(challenge_seed, Domain::Challenge);

  channel.send(make_key_msg(KeyAnnounce{key.scheme, params}));

  VerifierOutcome outcome;
  for (uint32_t round = 0; round < rounds; ++round) {
    RoundTranscript tape;
    tape.scheme_id = static_cast<uint8_t>(key.scheme);
    try {
      if (key.scheme == SchemeId::Stern)
        verifier_round_stern(channel, params, key.stern_pk(), challenges, com, tape);
      else
        verifier_round_cve(channel, params, key.cve_pk(), challenges, com, tape);
      tape.verdict = 1;
      ++outcome.rounds_completed;
      if (capture) outcome.transcripts.push_back(std::move(tape));
    } catch (const RoundFailure& failure) {
      tape.verdict = 0;
      if (capture) outcome.transcripts.push_back(std::move(tape));
      outcome.reason = failure.reason;
      log_info("round " + std::to_string(round + 1) +
               " rejected: " + reject_name(failure.reason));
      send_result_best_effort(channel, {false, failure.reason, reject_name(failure.reason)});
      return outcome;
    } catch (const WireError& e) {
      tape.verdict = 0;
      if (capture) outcome.transcripts.push_back(std::move(tape));
      outcome.reason = Reject::Malformed;
      log_info(std::string("round failed on frame: ") + e.what());
      send_result_best_effort(channel, {false, Reject::Malformed, e.what()});
      return outcome;
    } catch (const NetError& e) {
      if (e.kind() != NetError::Kind::Timeout) throw;
      tape.verdict = 0;
      if (capture) outcome.transcripts.push_back(std::move(tape));
      outcome.reason = Reject::Timeout;
      log_info("message timeout");
      send_result_best_effort(channel, {false, Reject::Timeout, "timeout"});
      return outcome;
    }
    log_debug("round " + std::to_string(round + 1) + "/" + std::to_string(rounds) + " accepted");
  }
  outcome.success = true;
  send_result_best_effort(channel, {true, Reject::None, "success"});
  return outcome;
}

namespace {

// Receives the next protocol message; an early Result ends the session.
struct EarlyResult {
  ResultMsg result;
};

WireMessage recv_expect(MessageChannel& channel, MsgType expected) {
  WireMessage msg = channel.recv();
  if (msg.type == MsgType::Result) {
    auto result = parse_result_msg(msg);
    if (!result) throw RoundFailure{Reject::Malformed};
    throw EarlyResult{*result};
  }
  if (msg.type != expected) throw RoundFailure{Reject::Malformed};
  return msg;
}

}  // namespace

ProverOutcome run_prover_session(MessageChannel& channel, const KeyFile& key,
                                 const Seed& session_seed) {
  if (!key.has_secret())
    throw std::invalid_argument("prover session requires a secret-bearing key file");

  WireMessage key_msg = channel.recv();
  auto announce = parse_key_msg(key_msg);
  if (!announce) return {false, false, Reject::Malformed};
  if (announce->scheme != key.scheme || !params_compatible(announce->params, key.params)) {
    log_error("verifier announced incompatible scheme or parameters");
    return {false, false, Reject::Malformed};
  }
  const Params& params = key.params;
  HashCommitment com(params);
  const SecretKey& sk = *key.secret;

  try {
    for (uint32_t round = 0; round < announce->params.rounds; ++round) {
      Seed round_seed = derive_seed(session_seed, "round", round, params.seed_bytes());
      if (key.scheme == SchemeId::Stern) {
        SternProverState state =
            stern_prover_commit(params, sk, key.stern_pk(), round_seed, com);
        channel.send(make_stern_commit_msg(state.coms));
        WireMessage ch_msg = recv_expect(channel, MsgType::S1Challenge);
        auto ch = parse_challenge_msg(MsgType::S1Challenge, 3, ch_msg);
        if (!ch) return {false, false, Reject::Malformed};
        channel.send(make_stern_response_msg(stern_prover_respond(state, *ch, sk)));
      } else {
        CveProverState state = cve_prover_commit(params, sk, key.cve_pk(), round_seed, com);
        channel.send(make_cve_commit_msg(state.coms));
        WireMessage alpha_msg = recv_expect(channel, MsgType::S2Alpha);
        auto blind = parse_alpha_msg(params, alpha_msg);
        if (!blind) return {false, false, Reject::Malformed};
        channel.send(make_beta_msg(cve_prover_blinded_sum(state, sk, *blind)));
        WireMessage ch_msg = recv_expect(channel, MsgType::S2Challenge);
        auto ch = parse_challenge_msg(MsgType::S2Challenge, 2, ch_msg);
        if (!ch) return {false, false, Reject::Malformed};
        channel.send(make_cve_response_msg(cve_prover_respond(state, *ch)));
      }
    }
    WireMessage final_msg = channel.recv();
    auto result = parse_result_msg(final_msg);
    if (!result) return {false, false, Reject::Malformed};
    return {true, result->success, result->reason};
  } catch (const EarlyResult& early) {
    log_info("verifier ended session early: " + early.result.text);
    return {false, early.result.success, early.result.reason};
  } catch (const RoundFailure& failure) {
    return {false, false, failure.reason};
  }
}

VerifierOutcome replay_transcripts(const KeyFile& key, const TranscriptFile& file) {
  const Params& params = file.params;
  HashCommitment com(params);
  VerifierOutcome outcome;

  for (const RoundTranscript& tape : file.transcripts) {
    Reject failed = Reject::None;
    if (tape.scheme_id != static_cast<uint8_t>(key.scheme)) {
      failed = Reject::Malformed;
    } else if (key.scheme == SchemeId::Stern) {
      if (tape.messages.size() != 3) {
        failed = tape.messages.size() < 3 ? Reject::Incomplete : Reject::Malformed;
      } else {
        auto coms = parse_stern_commit_msg(params, tape.messages[0]);
        auto ch = parse_challenge_msg(MsgType::S1Challenge, 3, tape.messages[1]);
        if (!coms || !ch) {
          failed = Reject::Malformed;
        } else {
          auto resp = parse_stern_response_msg(params, *ch, tape.messages[2]);
          if (!resp) {
            failed = Reject::Malformed;
          } else {
            CheckResult check =
                stern_verifier_check(params, key.stern_pk(), *coms, *ch, *resp, com);
            if (!check) failed = check.reason;
          }
        }
      }
    } else {
      if (tape.messages.size() != 5) {
        failed = tape.messages.size() < 5 ? Reject::Incomplete : Reject::Malformed;
      } else {
        auto coms = parse_cve_commit_msg(params, tape.messages[0]);
        auto blind = parse_alpha_msg(params, tape.messages[1]);
        auto blinded_sum = parse_beta_msg(params, tape.messages[2]);
        auto ch = parse_challenge_msg(MsgType::S2Challenge, 2, tape.messages[3]);
        if (!coms || !blind || !blinded_sum || !ch) {
          failed = Reject::Malformed;
        } else {
          auto resp = parse_cve_response_msg(params, *ch, tape.messages[4]);
          if (!resp) {
            failed = Reject::Malformed;
          } else {
            CheckResult check = cve_verifier_check(params, key.cve_pk(), *coms, *blind,
                                                   *blinded_sum, *ch, *resp, com);
            if (!check) failed = check.reason;
          }
        }
      }
    }
    if (failed != Reject::None) {
      outcome.reason = failed;
      return outcome;
    }
    ++outcome.rounds_completed;
  }

  if (outcome.rounds_completed != params.rounds) {
    outcome.reason = Reject::Incomplete;
    return outcome;
  }
  outcome.success = true;
  return outcome;
}

}  // namespace lweid
