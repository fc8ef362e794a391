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

#ifndef LWEID_PROTOCOL_HPP
#define LWEID_PROTOCOL_HPP

#include <cstdint>
#include <span>
#include <string>

#include "lweid/commit.hpp"
#include "lweid/fq.hpp"
#include "lweid/prg.hpp"

namespace lweid {

enum class SchemeId : uint8_t {
  Stern = 1,  // 3-pass, challenge space {1,2,3}, soundness error 2/3
  Cve = 2,    // 5-pass with scalar blind, soundness error (q+1)/2q
};

const char* scheme_name(SchemeId id);

/// Both schemes share the same secret shape: s and the sparse error e with
/// b = A s + e.
struct SecretKey {
  FqVector s;
  FqVector e;

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

enum class Reject : uint8_t {
  None = 0,
  Commitment = 1,  // an opening failed to verify
  Weight = 2,      // revealed error image has the wrong Hamming weight
  Malformed = 3,   // response shape does not match the challenge
  Challenge = 4,   // challenge value outside the scheme's space
  Timeout = 5,
  Incomplete = 6,  // session ended before all rounds ran
};

const char* reject_name(Reject r);

/// Verifier verdict for one protocol check. Never throws on untrusted
/// input; malformed data maps to a reject reason.
struct CheckResult {
  bool ok = false;
  Reject reason = Reject::None;

  static CheckResult accept() { return {true, Reject::None}; }
  static CheckResult reject(Reject r) { return {false, r}; }
  explicit operator bool() const { return ok; }
};

/// Produced by an extractor when accepting transcripts cannot yield a valid
/// secret: evidence that some commitment verifies under two distinct
/// openings. commitment_index is 1-based; 0 means the inconsistency cannot
/// be pinned on a single digest from the transcripts at hand.
struct CollisionReport {
  int commitment_index = 0;
  Opening first;
  Opening second;
  std::string detail;
};

/// Honest-verifier challenge source: challenges and blinds are derived by
/// hashing the session nonce with the values on the tape so far. Used by
/// the simulators and the statistical harness.
class ChallengeOracle {
 public:
  explicit ChallengeOracle(Seed nonce) : nonce_(std::move(nonce)) {}

  /// Uniform in {1..count}, keyed by the tape context.
  int challenge(std::span<const uint8_t> context, int count) const;
  /// Uniform in [0, q).
  Fq blind(std::span<const uint8_t> context, uint16_t q) const;

 private:
  Seed nonce_;
};

struct SimOptions {
  size_t rewind_budget = 1000;  // max attempts per round before aborting
  bool fixed_permutation = false;  // intentionally broken: reuse one permutation seed
};

struct SimStats {
  uint64_t attempts = 0;
  uint64_t oracle_calls = 0;
  size_t rounds = 0;
};

}  // namespace lweid

#endif  // LWEID_PROTOCOL_HPP
