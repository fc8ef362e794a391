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

#ifndef LWEID_STERN_HPP
#define LWEID_STERN_HPP

#include <variant>
#include <vector>

#include "lweid/gaussian.hpp"
#include "lweid/isometry.hpp"
#include "lweid/protocol.hpp"
#include "lweid/wire.hpp"

namespace lweid {

// 3-pass identification scheme. One round: the prover commits to an
// isometry and two masked images of the key equation, the verifier picks a
// challenge in {1,2,3}, the prover opens the two commitments that challenge
// covers. A prover without the secret can prepare for at most two of the
// three challenges, hence the 2/3 soundness error per round.

struct SternPublicKey {
  FqMatrix A;   // n x m, uniform
  FqVector b;   // A s + e
  uint16_t p;   // Hamming weight of e

  friend bool operator==(const SternPublicKey&, const SternPublicKey&) = default;
};

struct SternKeyPair {
  SternPublicKey pk;
  SecretKey sk;
};

struct SternCommitMsg {
  Commitment c1;  // com(isometry)
  Commitment c2;  // com(iso(A(u+s)))
  Commitment c3;  // com(iso(Au+b))

  friend bool operator==(const SternCommitMsg&, const SternCommitMsg&) = default;
  std::vector<uint8_t> concat_digests() const;
};

struct SternProverState {
  FqVector mask;            // u, uniform in F_q^m
  Isometry iso;
  Seed mask_seed, iso_scale_seed, iso_perm_seed;
  Seed r1, r2, r3;          // commitment randomness
  FqVector masked_image;    // iso(A(u+s)), the value committed in c2
  FqVector shifted_image;   // iso(Au+b), the value committed in c3
  SternCommitMsg coms;
};

// Response variants. The isometry and the mask travel as the seeds that
// generated them; values that depend on the secret travel in full.
struct SternResponse1 {
  Seed open_r1, open_r2;
  FqVector masked_secret;  // u + s
  Seed iso_scale_seed, iso_perm_seed;
};
struct SternResponse2 {
  Seed open_r2, open_r3;
  FqVector masked_image;  // iso(A(u+s))
  FqVector error_image;   // iso(e), weight p
};
struct SternResponse3 {
  Seed open_r1, open_r3;
  Seed iso_scale_seed, iso_perm_seed;
  Seed mask_seed;
};
using SternResponse = std::variant<SternResponse1, SternResponse2, SternResponse3>;

/// Deterministic in master_seed. Resamples e while its weight is 0 or n.
SternKeyPair stern_keygen(const Params& params, const Seed& master_seed);

/// All per-round randomness comes from round_seed via domain-separated
/// derivation, so a round is reproducible from (keys, round_seed).
SternProverState stern_prover_commit(const Params& params, const SecretKey& sk,
                                     const SternPublicKey& pk, const Seed& round_seed,
                                     const CommitmentScheme& com);

SternResponse stern_prover_respond(const SternProverState& state, int challenge,
                                   const SecretKey& sk);

/// All inputs untrusted; malformed responses map to a reject reason.
CheckResult stern_verifier_check(const Params& params, const SternPublicKey& pk,
                                 const SternCommitMsg& coms, int challenge,
                                 const SternResponse& resp, const CommitmentScheme& com);

struct SternTranscript {
  SternCommitMsg coms;
  int challenge;
  SternResponse resp;
};

/// Given accepting transcripts for challenges 1, 2, 3 over identical
/// commitments, recovers the secret pair or exhibits a commitment with two
/// distinct valid openings. Transcripts that do not share commitments or do
/// not verify violate the precondition (throws std::invalid_argument).
std::variant<SecretKey, CollisionReport> stern_extract(
    const Params& params, const SternPublicKey& pk, const SternTranscript& t1,
    const SternTranscript& t2, const SternTranscript& t3, const CommitmentScheme& com);

/// Zero-knowledge simulator: produces rounds indistinguishable from honest
/// ones without the secret, rewinding the oracle on mispredicted
/// challenges. Throws std::runtime_error when a round exceeds the rewind
/// budget.
std::vector<RoundTranscript> stern_simulate(const Params& params, const SternPublicKey& pk,
                                            const ChallengeOracle& oracle, size_t rounds,
                                            const Seed& sim_seed, const CommitmentScheme& com,
                                            const SimOptions& options = {},
                                            SimStats* stats = nullptr);

/// Strategy of a secretless prover: which two challenges the commitments
/// are prepared to answer.
enum class SternCheatPlan : uint8_t { Cover12 = 0, Cover13 = 1, Cover23 = 2 };

class SternCheater {
 public:
  SternCheater(const Params& params, const SternPublicKey& pk, SternCheatPlan plan,
               const Seed& rng_seed, const CommitmentScheme& com);

  const SternCommitMsg& commitments() const { return coms_; }
  /// Answers every challenge; verification fails on the uncovered one.
  SternResponse respond(int challenge) const;

 private:
  SternCheatPlan plan_;
  FqVector mask_;           // u
  FqVector fake_secret_;    // s'
  FqVector committed_c2_;   // value behind c2
  FqVector committed_c3_;   // value behind c3
  Isometry iso_;
  Seed mask_seed_, iso_scale_seed_, iso_perm_seed_, r1_, r2_, r3_;
  SternCommitMsg coms_;
};

SternCheater stern_cheat_round(const Params& params, const SternPublicKey& pk,
                               SternCheatPlan plan, const Seed& rng_seed,
                               const CommitmentScheme& com);

}  // namespace lweid

#endif  // LWEID_STERN_HPP
