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

#ifndef LWEID_CVE_HPP
#define LWEID_CVE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "lweid/gaussian.hpp"
#include "lweid/isometry.hpp"
#include "lweid/linalg.hpp"
#include "lweid/protocol.hpp"
#include "lweid/wire.hpp"

namespace lweid {

// 5-pass identification scheme with a verifier-chosen scalar blind. The
// public key adds the left annihilator of A and the error syndrome
// y = Aperp e; the blind folds the error into beta = iso(u + alpha e), which
// pushes the per-round soundness error down to (q+1)/2q.

struct CvePublicKey {
  FqMatrix A;      // n x m
  FqMatrix Aperp;  // (n-m) x n left annihilator, Aperp A == 0
  FqVector y;      // Aperp e (== Aperp b)
  FqVector b;      // A s + e
  uint16_t p;      // Hamming weight of e

  friend bool operator==(const CvePublicKey&, const CvePublicKey&) = default;
};

struct CveKeyPair {
  CvePublicKey pk;
  SecretKey sk;
};

struct CveCommitMsg {
  Commitment c1;  // com(scale || perm || Aperp u)
  Commitment c2;  // com(iso(u) || iso(e))

  friend bool operator==(const CveCommitMsg&, const CveCommitMsg&) = default;
  std::vector<uint8_t> concat_digests() const;
};

struct CveProverState {
  FqVector mask;  // u, uniform in F_q^n
  Isometry iso;
  Seed iso_scale_seed, iso_perm_seed;
  Seed r1, r2;
  FqVector mask_image;   // iso(u), first half of c2's preimage
  FqVector error_image;  // iso(e), second half of c2's preimage
  std::optional<Fq> blind;  // alpha, recorded when the blinded sum is produced
  CveCommitMsg coms;
};

struct CveResponse1 {
  Seed open_r1;
  Seed iso_scale_seed, iso_perm_seed;
};
struct CveResponse2 {
  Seed open_r2;
  FqVector error_image;  // iso(e), weight p
};
using CveResponse = std::variant<CveResponse1, CveResponse2>;

/// Deterministic in master_seed; resamples A until it has full column rank
/// (the left null space must have dimension exactly n - m).
CveKeyPair cve_keygen(const Params& params, const Seed& master_seed);

CveProverState cve_prover_commit(const Params& params, const SecretKey& sk,
                                 const CvePublicKey& pk, const Seed& round_seed,
                                 const CommitmentScheme& com);

/// beta = iso(u + alpha e); records alpha in the state.
FqVector cve_prover_blinded_sum(CveProverState& state, const SecretKey& sk, Fq blind);

CveResponse cve_prover_respond(const CveProverState& state, int challenge);

CheckResult cve_verifier_check(const Params& params, const CvePublicKey& pk,
                               const CveCommitMsg& coms, Fq blind, const FqVector& blinded_sum,
                               int challenge, const CveResponse& resp,
                               const CommitmentScheme& com);

struct CveTranscript {
  CveCommitMsg coms;
  Fq blind;
  FqVector blinded_sum;
  int challenge;
  CveResponse resp;
};

/// From an accepting challenge-1 transcript and an accepting challenge-2
/// transcript over the same commitments, recovers e or reports that the
/// two openings are inconsistent with every single witness (a binding
/// break). Mismatched or non-verifying transcripts throw.
std::variant<FqVector, CollisionReport> cve_extract(const Params& params, const CvePublicKey& pk,
                                                    const CveTranscript& t1,
                                                    const CveTranscript& t2,
                                                    const CommitmentScheme& com);

std::vector<RoundTranscript> cve_simulate(const Params& params, const CvePublicKey& pk,
                                          const ChallengeOracle& oracle, size_t rounds,
                                          const Seed& sim_seed, const CommitmentScheme& com,
                                          const SimOptions& options = {},
                                          SimStats* stats = nullptr);

/// Secretless prover attaining the (q+1)/2q bound: challenge 1 is answered
/// for every blind via a syndrome preimage of y; challenge 2 only when the
/// verifier's blind equals a pre-guessed value.
class CveCheater {
 public:
  CveCheater(const Params& params, const CvePublicKey& pk, const Seed& rng_seed,
             const CommitmentScheme& com);

  const CveCommitMsg& commitments() const { return coms_; }
  FqVector blinded_sum(Fq blind) const;  // iso(u + alpha * e'), any alpha
  CveResponse respond(int challenge) const;
  Fq guessed_blind() const { return guessed_blind_; }

 private:
  FqVector mask_;            // u
  FqVector syndrome_error_;  // e' with Aperp e' = y (weight unconstrained)
  FqVector decoy_error_;     // e'' of weight p backing the challenge-2 opening
  Isometry iso_;
  Fq guessed_blind_;
  Seed iso_scale_seed_, iso_perm_seed_, r1_, r2_;
  CveCommitMsg coms_;
};

CveCheater cve_cheat_round(const Params& params, const CvePublicKey& pk, const Seed& rng_seed,
                           const CommitmentScheme& com);

}  // namespace lweid

#endif  // LWEID_CVE_HPP
