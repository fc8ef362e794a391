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

#include "lweid/stern.hpp"

#include <stdexcept>
#include <string>

#include "lweid/codec.hpp"

namespace lweid {

SternKeyPair stern_keygen(const Params& params, const Seed& master_seed) {
  params.validate();
  const size_t sb = params.seed_bytes();
  SternKeyPair kp;
  kp.pk.A = expand_matrix(derive_seed(master_seed, "A", 0, sb), params.n, params.m, params.q);
  kp.sk.s = expand_vector(derive_seed(master_seed, "s", 0, sb), params.m, params.q);
  // A zero-weight or full-weight error makes the public weight check
  // vacuous; resample until 0 < wt(e) < n.
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt == 10000)
      throw std::runtime_error("stern_keygen: error weight degenerate for these parameters");
    kp.sk.e = sample_error(derive_seed(master_seed, "e", attempt, sb), params.n, params);
    size_t w = kp.sk.e.weight();
    if (w > 0 && w < params.n) break;
  }
  kp.pk.b = mat_vec_mul(kp.pk.A, kp.sk.s).add(kp.sk.e);
  kp.pk.p = static_cast<uint16_t>(kp.sk.e.weight());
  return kp;
}

SternProverState stern_prover_commit(const Params& params, const SecretKey& sk,
                                     const SternPublicKey& pk, const Seed& round_seed,
                                     const CommitmentScheme& com) {
  const size_t sb = params.seed_bytes();
  SternProverState st;
  st.mask_seed = derive_seed(round_seed, "u", 0, sb);
  st.iso_scale_seed = derive_seed(round_seed, "scale", 0, sb);
  st.iso_perm_seed = derive_seed(round_seed, "perm", 0, sb);
  st.r1 = derive_seed(round_seed, "r1", 0, sb);
  st.r2 = derive_seed(round_seed, "r2", 0, sb);
  st.r3 = derive_seed(round_seed, "r3", 0, sb);

  st.mask = expand_vector(st.mask_seed, params.m, params.q);
  st.iso = Isometry::from_seeds(st.iso_scale_seed, st.iso_perm_seed, params.n, params.q);

  FqVector masked = st.mask.add(sk.s);                       // u + s
  st.masked_image = st.iso.apply(mat_vec_mul(pk.A, masked)); // iso(A(u+s))
  st.shifted_image = st.iso.apply(mat_vec_mul(pk.A, st.mask).add(pk.b));  // iso(Au+b)

  st.coms.c1 = com.commit(st.iso.to_bytes(), st.r1);
  st.coms.c2 = com.commit(st.masked_image.to_bytes(), st.r2);
  st.coms.c3 = com.commit(st.shifted_image.to_bytes(), st.r3);
  return st;
}

SternResponse stern_prover_respond(const SternProverState& state, int challenge,
                                   const SecretKey& sk) {
  switch (challenge) {
    case 1:
      return SternResponse1{state.r1, state.r2, state.mask.add(sk.s), state.iso_scale_seed,
                            state.iso_perm_seed};
    case 2:
      return SternResponse2{state.r2, state.r3, state.masked_image, state.iso.apply(sk.e)};
    case 3:
      return SternResponse3{state.r1, state.r3, state.iso_scale_seed, state.iso_perm_seed,
                            state.mask_seed};
    default:
      throw std::invalid_argument("stern: challenge must be 1, 2 or 3");
  }
}

namespace {

bool seed_len_ok(const Params& params, const Seed& s) {
  return s.bytes.size() == params.seed_bytes();
}

}  // namespace

CheckResult stern_verifier_check(const Params& params, const SternPublicKey& pk,
                                 const SternCommitMsg& coms, int challenge,
                                 const SternResponse& resp, const CommitmentScheme& com) {
  if (challenge < 1 || challenge > 3) return CheckResult::reject(Reject::Challenge);

  switch (challenge) {
    case 1: {
      const auto* r = std::get_if<SternResponse1>(&resp);
      if (!r || !seed_len_ok(params, r->open_r1) || !seed_len_ok(params, r->open_r2) ||
          !seed_len_ok(params, r->iso_scale_seed) || !seed_len_ok(params, r->iso_perm_seed) ||
          r->masked_secret.size() != params.m || r->masked_secret.modulus() != params.q)
        return CheckResult::reject(Reject::Malformed);
      Isometry iso = Isometry::from_seeds(r->iso_scale_seed, r->iso_perm_seed, params.n, params.q);
      if (!com.verify(coms.c1, iso.to_bytes(), r->open_r1))
        return CheckResult::reject(Reject::Commitment);
      FqVector image = iso.apply(mat_vec_mul(pk.A, r->masked_secret));
      if (!com.verify(coms.c2, image.to_bytes(), r->open_r2))
        return CheckResult::reject(Reject::Commitment);
      return CheckResult::accept();
    }
    case 2: {
      const auto* r = std::get_if<SternResponse2>(&resp);
      if (!r || !seed_len_ok(params, r->open_r2) || !seed_len_ok(params, r->open_r3) ||
          r->masked_image.size() != params.n || r->masked_image.modulus() != params.q ||
          r->error_image.size() != params.n || r->error_image.modulus() != params.q)
        return CheckResult::reject(Reject::Malformed);
      if (!com.verify(coms.c2, r->masked_image.to_bytes(), r->open_r2))
        return CheckResult::reject(Reject::Commitment);
      if (r->error_image.weight() != pk.p) return CheckResult::reject(Reject::Weight);
      if (!com.verify(coms.c3, r->masked_image.add(r->error_image).to_bytes(), r->open_r3))
        return CheckResult::reject(Reject::Commitment);
      return CheckResult::accept();
    }
    default: {
      const auto* r = std::get_if<SternResponse3>(&resp);
      if (!r || !seed_len_ok(params, r->open_r1) || !seed_len_ok(params, r->open_r3) ||
          !seed_len_ok(params, r->iso_scale_seed) || !seed_len_ok(params, r->iso_perm_seed) ||
          !seed_len_ok(params, r->mask_seed))
        return CheckResult::reject(Reject::Malformed);
      Isometry iso = Isometry::from_seeds(r->iso_scale_seed, r->iso_perm_seed, params.n, params.q);
      if (!com.verify(coms.c1, iso.to_bytes(), r->open_r1))
        return CheckResult::reject(Reject::Commitment);
      FqVector mask = expand_vector(r->mask_seed, params.m, params.q);
      FqVector image = iso.apply(mat_vec_mul(pk.A, mask).add(pk.b));
      if (!com.verify(coms.c3, image.to_bytes(), r->open_r3))
        return CheckResult::reject(Reject::Commitment);
      return CheckResult::accept();
    }
  }
}

std::variant<SecretKey, CollisionReport> stern_extract(
    const Params& params, const SternPublicKey& pk, const SternTranscript& t1,
    const SternTranscript& t2, const SternTranscript& t3, const CommitmentScheme& com) {
  if (t1.challenge != 1 || t2.challenge != 2 || t3.challenge != 3)
    throw std::invalid_argument("stern_extract: transcripts must cover challenges 1, 2, 3");
  if (!(t1.coms == t2.coms) || !(t2.coms == t3.coms))
    throw std::invalid_argument("stern_extract: transcripts do not share commitments");
  for (const SternTranscript* t : {&t1, &t2, &t3})
    if (!stern_verifier_check(params, pk, t->coms, t->challenge, t->resp, com))
      throw std::invalid_argument("stern_extract: transcript does not verify");

  const auto& ra = std::get<SternResponse1>(t1.resp);
  const auto& rb = std::get<SternResponse2>(t2.resp);
  const auto& rc = std::get<SternResponse3>(t3.resp);

  Isometry iso_a = Isometry::from_seeds(ra.iso_scale_seed, ra.iso_perm_seed, params.n, params.q);
  Isometry iso_c = Isometry::from_seeds(rc.iso_scale_seed, rc.iso_perm_seed, params.n, params.q);
  FqVector mask_c = expand_vector(rc.mask_seed, params.m, params.q);

  SecretKey candidate;
  candidate.s = ra.masked_secret.sub(mask_c);      // (u + s) - u
  candidate.e = iso_c.apply_inverse(rb.error_image);

  if (mat_vec_mul(pk.A, candidate.s).add(candidate.e) == pk.b && candidate.e.weight() == pk.p)
    return candidate;

  // The algebra fails only if some commitment carries two distinct valid
  // openings; find it.
  const std::pair<Opening, Opening> opening_pairs[3] = {
      {Opening{iso_a.to_bytes(), ra.open_r1}, Opening{iso_c.to_bytes(), rc.open_r1}},
      {Opening{iso_a.apply(mat_vec_mul(pk.A, ra.masked_secret)).to_bytes(), ra.open_r2},
       Opening{rb.masked_image.to_bytes(), rb.open_r2}},
      {Opening{rb.masked_image.add(rb.error_image).to_bytes(), rb.open_r3},
       Opening{iso_c.apply(mat_vec_mul(pk.A, mask_c).add(pk.b)).to_bytes(), rc.open_r3}},
  };
  for (int i = 0; i < 3; ++i) {
    if (!(opening_pairs[i].first == opening_pairs[i].second)) {
      CollisionReport report;
      report.commitment_index = i + 1;
      report.first = opening_pairs[i].first;
      report.second = opening_pairs[i].second;
      report.detail = "commitment c" + std::to_string(i + 1) + " verifies under two openings";
      return report;
    }
  }
  throw std::logic_error("stern_extract: extraction failed with consistent openings");
}

std::vector<RoundTranscript> stern_simulate(const Params& params, const SternPublicKey& pk,
                                            const ChallengeOracle& oracle, size_t rounds,
                                            const Seed& sim_seed, const CommitmentScheme& com,
                                            const SimOptions& options, SimStats* stats) {
  const size_t sb = params.seed_bytes();
  std::vector<RoundTranscript> out;
  out.reserve(rounds);
  SimStats local;
  uint64_t attempt_counter = 0;

  for (size_t round = 0; round < rounds; ++round) {
    bool recorded = false;
    for (size_t tries = 0; tries < options.rewind_budget; ++tries) {
      Seed att = derive_seed(sim_seed, "att", attempt_counter++, sb);
      ++local.attempts;

      XofStream guess_stream(att, Domain::Challenge);
      int guess = int(guess_stream.uniform_below(3)) + 1;

      Seed iso_scale_seed = derive_seed(att, "scale", 0, sb);
      Seed iso_perm_seed = options.fixed_permutation ? Seed{std::vector<uint8_t>(sb, 0)}
                                                     : derive_seed(att, "perm", 0, sb);
      Seed mask_seed = derive_seed(att, "u", 0, sb);
      Seed r1 = derive_seed(att, "r1", 0, sb);
      Seed r2 = derive_seed(att, "r2", 0, sb);
      Seed r3 = derive_seed(att, "r3", 0, sb);
      Isometry iso = Isometry::from_seeds(iso_scale_seed, iso_perm_seed, params.n, params.q);

      auto fake_digest = [&](const char* label) {
        XofStream ds(derive_seed(att, label, 0, sb), Domain::Digest);
        Commitment c;
        c.digest.resize(com.digest_bytes());
        ds.fill(c.digest);
        return c;
      };

      SternCommitMsg coms;
      SternResponse resp;
      switch (guess) {
        case 1: {
          // Challenge 1 only touches c1 and c2; a uniform stand-in for u+s
          // matches the honest distribution.
          FqVector masked_secret =
              expand_vector(derive_seed(att, "v", 0, sb), params.m, params.q);
          coms.c1 = com.commit(iso.to_bytes(), r1);
          coms.c2 = com.commit(iso.apply(mat_vec_mul(pk.A, masked_secret)).to_bytes(), r2);
          coms.c3 = fake_digest("fake3");
          resp = SternResponse1{r1, r2, masked_secret, iso_scale_seed, iso_perm_seed};
          break;
        }
        case 2: {
          FqVector mask = expand_vector(mask_seed, params.m, params.q);
          FqVector fake_secret = expand_vector(derive_seed(att, "s", 0, sb), params.m, params.q);
          FqVector fake_error =
              expand_weight_vector(derive_seed(att, "e", 0, sb), params.n, pk.p, params.q, sb);
          FqVector masked_image = iso.apply(mat_vec_mul(pk.A, mask.add(fake_secret)));
          FqVector error_image = iso.apply(fake_error);
          coms.c2 = com.commit(masked_image.to_bytes(), r2);
          coms.c3 = com.commit(masked_image.add(error_image).to_bytes(), r3);
          coms.c1 = fake_digest("fake1");
          resp = SternResponse2{r2, r3, masked_image, error_image};
          break;
        }
        default: {
          FqVector mask = expand_vector(mask_seed, params.m, params.q);
          coms.c1 = com.commit(iso.to_bytes(), r1);
          coms.c3 = com.commit(iso.apply(mat_vec_mul(pk.A, mask).add(pk.b)).to_bytes(), r3);
          coms.c2 = fake_digest("fake2");
          resp = SternResponse3{r1, r3, iso_scale_seed, iso_perm_seed, mask_seed};
          break;
        }
      }

      ++local.oracle_calls;
      int ch = oracle.challenge(coms.concat_digests(), 3);
      if (ch != guess) continue;  // rewind with fresh randomness

      RoundTranscript t;
      t.scheme_id = static_cast<uint8_t>(SchemeId::Stern);
      t.messages.push_back(make_stern_commit_msg(coms));
      t.messages.push_back(make_challenge_msg(MsgType::S1Challenge, ch));
      t.messages.push_back(make_stern_response_msg(resp));
      t.verdict = 1;
      out.push_back(std::move(t));
      recorded = true;
      break;
    }
    if (!recorded)
      throw std::runtime_error("stern_simulate: rewind budget of " +
                               std::to_string(options.rewind_budget) + " tries exceeded in round " +
                               std::to_string(round));
  }
  local.rounds = rounds;
  if (stats) *stats = local;
  return out;
}

SternCheater::SternCheater(const Params& params, const SternPublicKey& pk, SternCheatPlan plan,
                           const Seed& rng_seed, const CommitmentScheme& com)
    : plan_(plan) {
  const size_t sb = params.seed_bytes();
  iso_scale_seed_ = derive_seed(rng_seed, "scale", 0, sb);
  iso_perm_seed_ = derive_seed(rng_seed, "perm", 0, sb);
  iso_ = Isometry::from_seeds(iso_scale_seed_, iso_perm_seed_, params.n, params.q);
  mask_seed_ = derive_seed(rng_seed, "u", 0, sb);
  r1_ = derive_seed(rng_seed, "r1", 0, sb);
  r2_ = derive_seed(rng_seed, "r2", 0, sb);
  r3_ = derive_seed(rng_seed, "r3", 0, sb);
  mask_ = expand_vector(mask_seed_, params.m, params.q);
  fake_secret_ = expand_vector(derive_seed(rng_seed, "s", 0, sb), params.m, params.q);

  FqVector masked_image = iso_.apply(mat_vec_mul(pk.A, mask_.add(fake_secret_)));
  FqVector shifted_image = iso_.apply(mat_vec_mul(pk.A, mask_).add(pk.b));

  switch (plan_) {
    case SternCheatPlan::Cover13:
      // Both honest-form values are computable from public data alone; only
      // challenge 2 would expose that their difference has the wrong weight.
      committed_c2_ = masked_image;
      committed_c3_ = shifted_image;
      break;
    case SternCheatPlan::Cover12: {
      FqVector fake_error =
          expand_weight_vector(derive_seed(rng_seed, "e", 0, sb), params.n, pk.p, params.q, sb);
      committed_c2_ = masked_image;
      committed_c3_ = masked_image.add(iso_.apply(fake_error));
      break;
    }
    case SternCheatPlan::Cover23: {
      FqVector fake_error =
          expand_weight_vector(derive_seed(rng_seed, "e", 0, sb), params.n, pk.p, params.q, sb);
      committed_c3_ = shifted_image;
      committed_c2_ = shifted_image.sub(iso_.apply(fake_error));
      break;
    }
  }
  coms_.c1 = com.commit(iso_.to_bytes(), r1_);
  coms_.c2 = com.commit(committed_c2_.to_bytes(), r2_);
  coms_.c3 = com.commit(committed_c3_.to_bytes(), r3_);
}

SternResponse SternCheater::respond(int challenge) const {
  switch (challenge) {
    case 1:
      return SternResponse1{r1_, r2_, mask_.add(fake_secret_), iso_scale_seed_, iso_perm_seed_};
    case 2:
      return SternResponse2{r2_, r3_, committed_c2_, committed_c3_.sub(committed_c2_)};
    case 3:
      return SternResponse3{r1_, r3_, iso_scale_seed_, iso_perm_seed_, mask_seed_};
    default:
      throw std::invalid_argument("stern: challenge must be 1, 2 or 3");
  }
}

SternCheater stern_cheat_round(const Params& params, const SternPublicKey& pk, SternCheatPlan plan,
                               const Seed& rng_seed, const CommitmentScheme& com) {
  return SternCheater(params, pk, plan, rng_seed, com);
}

}  // namespace lweid
