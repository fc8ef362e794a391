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

#include "lweid/harness.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lweid/codec.hpp"

namespace lweid {

namespace {

bool honest_stern_round(const Params& params, const SternKeyPair& kp, const Seed& round_seed,
                        const ChallengeOracle& oracle, const CommitmentScheme& com,
                        RoundTranscript* tape) {
  SternProverState state = stern_prover_commit(params, kp.sk, kp.pk, round_seed, com);
  int ch = oracle.challenge(state.coms.concat_digests(), 3);
  SternResponse resp = stern_prover_respond(state, ch, kp.sk);
  CheckResult check = stern_verifier_check(params, kp.pk, state.coms, ch, resp, com);
  if (tape) {
    tape->scheme_id = static_cast<uint8_t>(SchemeId::Stern);
    tape->messages = {make_stern_commit_msg(state.coms),
                      make_challenge_msg(MsgType::S1Challenge, ch),
                      make_stern_response_msg(resp)};
    tape->verdict = check.ok ? 1 : 0;
  }
  return check.ok;
}

bool honest_cve_round(const Params& params, const CveKeyPair& kp, const Seed& round_seed,
                      const ChallengeOracle& oracle, const CommitmentScheme& com,
                      RoundTranscript* tape) {
  CveProverState state = cve_prover_commit(params, kp.sk, kp.pk, round_seed, com);
  auto digests = state.coms.concat_digests();
  Fq blind = oracle.blind(digests, params.q);
  FqVector blinded_sum = cve_prover_blinded_sum(state, kp.sk, blind);
  std::vector<uint8_t> tape_bytes = digests;
  blinded_sum.append_bytes(tape_bytes);
  int ch = oracle.challenge(tape_bytes, 2);
  CveResponse resp = cve_prover_respond(state, ch);
  CheckResult check =
      cve_verifier_check(params, kp.pk, state.coms, blind, blinded_sum, ch, resp, com);
  if (tape) {
    tape->scheme_id = static_cast<uint8_t>(SchemeId::Cve);
    tape->messages = {make_cve_commit_msg(state.coms), make_alpha_msg(blind),
                      make_beta_msg(blinded_sum), make_challenge_msg(MsgType::S2Challenge, ch),
                      make_cve_response_msg(resp)};
    tape->verdict = check.ok ? 1 : 0;
  }
  return check.ok;
}

}  // namespace

CompletenessReport completeness_suite(const Params& params, SchemeId scheme, size_t trials,
                                      const Seed& seed) {
  params.validate();
  const size_t sb = params.seed_bytes();
  HashCommitment com(params);
  ChallengeOracle oracle(derive_seed(seed, "nonce", 0, sb));
  Seed key_seed = derive_seed(seed, "key", 0, sb);

  CompletenessReport report;
  report.trials = trials;
  if (scheme == SchemeId::Stern) {
    SternKeyPair kp = stern_keygen(params, key_seed);
    for (size_t t = 0; t < trials; ++t) {
      Seed session = derive_seed(seed, "trial", t, sb);
      bool ok = true;
      for (uint32_t r = 0; ok && r < params.rounds; ++r)
        ok = honest_stern_round(params, kp, derive_seed(session, "round", r, sb), oracle, com,
                                nullptr);
      report.accepted += ok;
    }
  } else {
    CveKeyPair kp = cve_keygen(params, key_seed);
    for (size_t t = 0; t < trials; ++t) {
      Seed session = derive_seed(seed, "trial", t, sb);
      bool ok = true;
      for (uint32_t r = 0; ok && r < params.rounds; ++r)
        ok = honest_cve_round(params, kp, derive_seed(session, "round", r, sb), oracle, com,
                              nullptr);
      report.accepted += ok;
    }
  }
  return report;
}

SoundnessEstimate estimate_soundness(const Params& params, SchemeId scheme, size_t trials,
                                     size_t rounds_per_trial, const Seed& seed) {
  params.validate();
  if (trials == 0 || rounds_per_trial == 0)
    throw std::invalid_argument("estimate_soundness: trials and rounds must be positive");
  const size_t sb = params.seed_bytes();
  HashCommitment com(params);
  ChallengeOracle oracle(derive_seed(seed, "nonce", 0, sb));
  Seed key_seed = derive_seed(seed, "key", 0, sb);

  SoundnessEstimate est;
  est.trials = trials;
  double per_round;
  if (scheme == SchemeId::Stern) {
    per_round = 2.0 / 3.0;
    SternKeyPair kp = stern_keygen(params, key_seed);
    for (size_t t = 0; t < trials; ++t) {
      Seed trial_seed = derive_seed(seed, "trial", t, sb);
      bool all_ok = true;
      for (size_t r = 0; all_ok && r < rounds_per_trial; ++r) {
        Seed rng = derive_seed(trial_seed, "round", r, sb);
        XofStream plan_stream(derive_seed(trial_seed, "plan", r, sb), Domain::Challenge);
        auto plan = static_cast<SternCheatPlan>(plan_stream.uniform_below(3));
        SternCheater cheater(params, kp.pk, plan, rng, com);
        int ch = oracle.challenge(cheater.commitments().concat_digests(), 3);
        all_ok = stern_verifier_check(params, kp.pk, cheater.commitments(), ch,
                                      cheater.respond(ch), com)
                     .ok;
      }
      est.accepted += all_ok;
    }
  } else {
    per_round = (double(params.q) + 1.0) / (2.0 * double(params.q));
    CveKeyPair kp = cve_keygen(params, key_seed);
    for (size_t t = 0; t < trials; ++t) {
      Seed trial_seed = derive_seed(seed, "trial", t, sb);
      bool all_ok = true;
      for (size_t r = 0; all_ok && r < rounds_per_trial; ++r) {
        Seed rng = derive_seed(trial_seed, "round", r, sb);
        CveCheater cheater(params, kp.pk, rng, com);
        auto digests = cheater.commitments().concat_digests();
        Fq blind = oracle.blind(digests, params.q);
        FqVector blinded_sum = cheater.blinded_sum(blind);
        std::vector<uint8_t> tape = digests;
        blinded_sum.append_bytes(tape);
        int ch = oracle.challenge(tape, 2);
        all_ok = cve_verifier_check(params, kp.pk, cheater.commitments(), blind, blinded_sum, ch,
                                    cheater.respond(ch), com)
                     .ok;
      }
      est.accepted += all_ok;
    }
  }
  est.ci = binomial_ci_99(est.accepted, est.trials);
  est.theoretical = std::pow(per_round, double(rounds_per_trial));
  return est;
}

std::vector<RoundTranscript> honest_transcripts(const Params& params, const SternKeyPair& kp,
                                                size_t count, const Seed& seed) {
  const size_t sb = params.seed_bytes();
  HashCommitment com(params);
  ChallengeOracle oracle(derive_seed(seed, "nonce", 0, sb));
  std::vector<RoundTranscript> out(count);
  for (size_t r = 0; r < count; ++r)
    honest_stern_round(params, kp, derive_seed(seed, "round", r, sb), oracle, com, &out[r]);
  return out;
}

std::vector<RoundTranscript> honest_transcripts(const Params& params, const CveKeyPair& kp,
                                                size_t count, const Seed& seed) {
  const size_t sb = params.seed_bytes();
  HashCommitment com(params);
  ChallengeOracle oracle(derive_seed(seed, "nonce", 0, sb));
  std::vector<RoundTranscript> out(count);
  for (size_t r = 0; r < count; ++r)
    honest_cve_round(params, kp, derive_seed(seed, "round", r, sb), oracle, com, &out[r]);
  return out;
}

namespace {

struct Observables {
  CountMap challenge;
  CountMap digest_bytes;
  CountMap revealed_weight;
  CountMap response_length;
  CountMap perm_first_source;
  CountMap error_image_entries;
  CountMap blind;         // 5-pass only
  CountMap blinded_entries;  // 5-pass only
};

void add_digest_bytes(CountMap& map, const WireMessage& msg) {
  for (uint8_t b : msg.payload) ++map[b];
}

uint16_t first_source_of(const Seed& perm_seed, size_t n) {
  return expand_permutation(perm_seed, n)[0];
}

Observables collect(const Params& params, const std::vector<RoundTranscript>& transcripts,
                    SchemeId scheme) {
  Observables obs;
  for (const RoundTranscript& t : transcripts) {
    if (scheme == SchemeId::Stern) {
      if (t.messages.size() != 3) throw std::invalid_argument("zk_stat_test: malformed transcript");
      add_digest_bytes(obs.digest_bytes, t.messages[0]);
      auto ch = parse_challenge_msg(MsgType::S1Challenge, 3, t.messages[1]);
      if (!ch) throw std::invalid_argument("zk_stat_test: malformed challenge");
      ++obs.challenge[*ch];
      ++obs.response_length[int64_t(t.messages[2].payload.size())];
      auto resp = parse_stern_response_msg(params, *ch, t.messages[2]);
      if (!resp) throw std::invalid_argument("zk_stat_test: malformed response");
      if (const auto* r1 = std::get_if<SternResponse1>(&*resp)) {
        ++obs.perm_first_source[first_source_of(r1->iso_perm_seed, params.n)];
      } else if (const auto* r2 = std::get_if<SternResponse2>(&*resp)) {
        ++obs.revealed_weight[int64_t(r2->error_image.weight())];
        for (size_t i = 0; i < r2->error_image.size(); ++i)
          ++obs.error_image_entries[r2->error_image[i]];
      } else if (const auto* r3 = std::get_if<SternResponse3>(&*resp)) {
        ++obs.perm_first_source[first_source_of(r3->iso_perm_seed, params.n)];
      }
    } else {
      if (t.messages.size() != 5) throw std::invalid_argument("zk_stat_test: malformed transcript");
      add_digest_bytes(obs.digest_bytes, t.messages[0]);
      auto blind = parse_alpha_msg(params, t.messages[1]);
      auto blinded = parse_beta_msg(params, t.messages[2]);
      auto ch = parse_challenge_msg(MsgType::S2Challenge, 2, t.messages[3]);
      if (!blind || !blinded || !ch)
        throw std::invalid_argument("zk_stat_test: malformed transcript");
      ++obs.blind[*blind];
      for (size_t i = 0; i < blinded->size(); ++i) ++obs.blinded_entries[(*blinded)[i]];
      ++obs.challenge[*ch];
      ++obs.response_length[int64_t(t.messages[4].payload.size())];
      auto resp = parse_cve_response_msg(params, *ch, t.messages[4]);
      if (!resp) throw std::invalid_argument("zk_stat_test: malformed response");
      if (const auto* r1 = std::get_if<CveResponse1>(&*resp)) {
        ++obs.perm_first_source[first_source_of(r1->iso_perm_seed, params.n)];
      } else if (const auto* r2 = std::get_if<CveResponse2>(&*resp)) {
        ++obs.revealed_weight[int64_t(r2->error_image.weight())];
        for (size_t i = 0; i < r2->error_image.size(); ++i)
          ++obs.error_image_entries[r2->error_image[i]];
      }
    }
  }
  return obs;
}

uint64_t total_count(const CountMap& m) {
  uint64_t t = 0;
  for (const auto& [k, c] : m) t += c;
  return t;
}

void push_stat(std::vector<ZkStatResult>& out, const std::string& name, const CountMap& a,
               const CountMap& b) {
  uint64_t na = total_count(a), nb = total_count(b);
  if (na == 0 && nb == 0) return;  // statistic absent for this scheme/sample
  Chi2Result r = chi2_two_sample(a, b);
  out.push_back({name, size_t(na), size_t(nb), r.chi2, r.dof, r.p});
}

}  // namespace

std::vector<ZkStatResult> zk_stat_test(const Params& params,
                                       const std::vector<RoundTranscript>& real,
                                       const std::vector<RoundTranscript>& simulated) {
  if (real.empty() || simulated.empty())
    throw std::invalid_argument("zk_stat_test: empty transcript set");
  uint8_t scheme_byte = real.front().scheme_id;
  for (const auto& t : real)
    if (t.scheme_id != scheme_byte) throw std::invalid_argument("zk_stat_test: mixed schemes");
  for (const auto& t : simulated)
    if (t.scheme_id != scheme_byte) throw std::invalid_argument("zk_stat_test: mixed schemes");
  SchemeId scheme = static_cast<SchemeId>(scheme_byte);

  Observables a = collect(params, real, scheme);
  Observables b = collect(params, simulated, scheme);

  std::vector<ZkStatResult> out;
  push_stat(out, "challenge", a.challenge, b.challenge);
  push_stat(out, "digest_bytes", a.digest_bytes, b.digest_bytes);
  push_stat(out, "revealed_weight", a.revealed_weight, b.revealed_weight);
  push_stat(out, "response_length", a.response_length, b.response_length);
  push_stat(out, "perm_first_source", a.perm_first_source, b.perm_first_source);
  push_stat(out, "error_image_entries", a.error_image_entries, b.error_image_entries);
  push_stat(out, "blind", a.blind, b.blind);
  push_stat(out, "blinded_entries", a.blinded_entries, b.blinded_entries);
  return out;
}

ZkExperiment zk_experiment(const Params& params, SchemeId scheme, size_t rounds, const Seed& seed,
                           bool broken_simulator) {
  const size_t sb = params.seed_bytes();
  HashCommitment com(params);
  Seed key_seed = derive_seed(seed, "key", 0, sb);
  SimOptions options;
  options.fixed_permutation = broken_simulator;

  ZkExperiment exp;
  ChallengeOracle sim_oracle(derive_seed(seed, "sim-nonce", 0, sb));
  if (scheme == SchemeId::Stern) {
    SternKeyPair kp = stern_keygen(params, key_seed);
    exp.real = honest_transcripts(params, kp, rounds, derive_seed(seed, "real", 0, sb));
    exp.simulated = stern_simulate(params, kp.pk, sim_oracle, rounds,
                                   derive_seed(seed, "sim", 0, sb), com, options, &exp.sim_stats);
  } else {
    CveKeyPair kp = cve_keygen(params, key_seed);
    exp.real = honest_transcripts(params, kp, rounds, derive_seed(seed, "real", 0, sb));
    exp.simulated = cve_simulate(params, kp.pk, sim_oracle, rounds,
                                 derive_seed(seed, "sim", 0, sb), com, options, &exp.sim_stats);
  }
  return exp;
}

std::string render_zk_table(const std::vector<ZkStatResult>& results) {
  std::ostringstream out;
  out << "statistic             n_real   n_sim        chi2  dof       p\n";
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-20s %7zu %7zu %11.3f %4zu %7.4f\n", r.statistic.c_str(),
                  r.n_real, r.n_sim, r.chi2, r.dof, r.p);
    out << line;
  }
  return out.str();
}

std::string render_zk_csv(const std::vector<ZkStatResult>& results) {
  std::ostringstream out;
  out << "statistic,n_real,n_sim,chi2,dof,p\n";
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "%s,%zu,%zu,%.6f,%zu,%.6g\n", r.statistic.c_str(), r.n_real,
                  r.n_sim, r.chi2, r.dof, r.p);
    out << line;
  }
  return out.str();
}

}  // namespace lweid
