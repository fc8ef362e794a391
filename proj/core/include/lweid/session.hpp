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

#ifndef LWEID_SESSION_HPP
#define LWEID_SESSION_HPP

#include <chrono>
#include <vector>

#include "lweid/keyfile.hpp"
#include "lweid/net.hpp"
#include "lweid/protocol.hpp"
#include "lweid/wire.hpp"

namespace lweid {

/// One identification session is strictly sequential: the verifier
/// announces scheme and params, then runs `rounds` rounds, then sends the
/// verdict. Distinct sessions share nothing mutable.
inline constexpr std::chrono::milliseconds kMessageTimeout{10000};

class MessageChannel {
 public:
  virtual ~MessageChannel() = default;
  virtual void send(const WireMessage& msg) = 0;
  virtual WireMessage recv() = 0;
};

/// Frames messages over a TCP stream; recv enforces the per-message
/// timeout.
class TcpMessageChannel final : public MessageChannel {
 public:
  explicit TcpMessageChannel(TcpStream stream);

  void send(const WireMessage& msg) override;
  WireMessage recv() override;

 private:
  TcpStream stream_;
};

struct VerifierOutcome {
  bool success = false;
  Reject reason = Reject::None;
  uint32_t rounds_completed = 0;
  std::vector<RoundTranscript> transcripts;  // filled when capture is on
};

/// Runs the verifier side with uniform challenges drawn from
/// challenge_seed. The public key file must not be secret-bearing for a
/// server deployment, but that is the caller's policy; this function only
/// reads the public half. Timeouts become a failure verdict; transport
/// errors propagate as NetError.
VerifierOutcome run_verifier_session(MessageChannel& channel, const KeyFile& key, uint32_t rounds,
                                     const Seed& challenge_seed, bool capture = false);

struct ProverOutcome {
  bool completed = false;  // ran all announced rounds and got a verdict
  bool success = false;    // verdict from the verifier
  Reject reason = Reject::None;
};

/// Runs the prover side; the key file must carry the secret (throws
/// std::invalid_argument otherwise). Round count and params come from the
/// verifier's announcement; a params mismatch aborts with reason malformed.
ProverOutcome run_prover_session(MessageChannel& channel, const KeyFile& key,
                                 const Seed& session_seed);

/// Re-runs the verifier checks over recorded rounds. The returned verdict
/// matches what a live verifier would have produced on the same messages.
VerifierOutcome replay_transcripts(const KeyFile& key, const TranscriptFile& file);

}  // namespace lweid

#endif  // LWEID_SESSION_HPP
