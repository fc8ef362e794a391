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

#ifndef LWEID_HARNESS_HPP
#define LWEID_HARNESS_HPP

#include <string>
#include <vector>

#include "lweid/cve.hpp"
#include "lweid/stats.hpp"
#include "lweid/stern.hpp"
#include "lweid/wire.hpp"

namespace lweid {

// Statistical verification: completeness runs, empirical soundness-error
// estimation against the theoretical per-round values, and a
// transcript-indistinguishability proxy comparing observable marginals of
// real and simulated rounds. Trials are independent given disjoint seeds.

struct CompletenessReport {
  size_t trials = 0;
  size_t accepted = 0;
  bool all_accepted() const { return accepted == trials; }
};

/// Runs `trials` full honest identifications (params.rounds rounds each)
/// with hash-derived honest-verifier challenges.
CompletenessReport completeness_suite(const Params& params, SchemeId scheme, size_t trials,
                                      const Seed& seed);

struct SoundnessEstimate {
  size_t trials = 0;
  size_t accepted = 0;
  BinomialCi ci;       // 99% interval around the observed rate
  double theoretical;  // per-round bound raised to rounds_per_trial
};

/// Plays the scheme's cheating prover against an honest verifier. A trial
/// succeeds when all rounds_per_trial rounds are accepted.
SoundnessEstimate estimate_soundness(const Params& params, SchemeId scheme, size_t trials,
                                     size_t rounds_per_trial, const Seed& seed);

/// Honest executions recorded in wire format, challenge source as in
/// completeness_suite. All rounds use the given key pair.
std::vector<RoundTranscript> honest_transcripts(const Params& params, const SternKeyPair& kp,
                                                size_t count, const Seed& seed);
std::vector<RoundTranscript> honest_transcripts(const Params& params, const CveKeyPair& kp,
                                                size_t count, const Seed& seed);

struct ZkStatResult {
  std::string statistic;
  size_t n_real = 0;  // observations contributed by the first sample
  size_t n_sim = 0;   // observations contributed by the second sample
  double chi2 = 0.0;
  size_t dof = 0;
  double p = 1.0;
};

/// Compares marginal distributions of observable transcript values
/// (challenges, digest bytes, revealed weights, revealed permutation,
/// response lengths, revealed error-image entries; blinds and blinded sums
/// for the 5-pass scheme). Symmetric in its arguments. This is an
/// empirical proxy for statistical closeness, not a proof.
std::vector<ZkStatResult> zk_stat_test(const Params& params,
                                       const std::vector<RoundTranscript>& real,
                                       const std::vector<RoundTranscript>& simulated);

struct ZkExperiment {
  std::vector<RoundTranscript> real;
  std::vector<RoundTranscript> simulated;
  SimStats sim_stats;
};

/// One key pair, `rounds` real rounds and `rounds` simulated rounds over
/// it. broken_simulator fixes the simulator's permutation seed, a negative
/// control that any sound statistic battery must flag.
ZkExperiment zk_experiment(const Params& params, SchemeId scheme, size_t rounds, const Seed& seed,
                           bool broken_simulator = false);

std::string render_zk_table(const std::vector<ZkStatResult>& results);
std::string render_zk_csv(const std::vector<ZkStatResult>& results);

}  // namespace lweid

#endif  // LWEID_HARNESS_HPP
