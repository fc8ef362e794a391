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

#include "lweid/cve.hpp"

#include <stdexcept>
#include <string>

#include "lweid/codec.hpp"

namespace lweid {

namespace {

// c1's preimage: scale || perm || syndrome-of-mask, in the order they are
// committed (the verify side uses the same order).
std::vector<uint8_t> c1_preimage(const Isometry& iso, const FqVector& mask_syndrome) {
  std::vector<uint8_t> bytes = iso.to_bytes();
  mask_syndrome.append_bytes(bytes);
  return bytes;
}

// c2's preimage: iso(u) || iso(e).
std::vector<uint8_t> c2_preimage(const FqVector& mask_image, const FqVector& error_image) {
  std::vector<uint8_t> bytes = mask_image.to_bytes();
  error_image.append_bytes(bytes);
  return bytes;
}

bool seed_len_ok(const Params& params, const Seed& s) {
  return s.bytes.size() == params.seed_bytes();
}

}  // namespace

CveKeyPair cve_keygen(const Params& params, const Seed& master_seed) {
  params.validate();
  const size_t sb = params.seed_bytes();
  CveKeyPair kp;
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt == 10000)
      throw std::runtime_error("cve_keygen: could not sample a full-column-rank A");
    kp.pk.A = expand_matrix(derive_seed(master_seed, "A", attempt, sb), params.n, params.m, params.q);
    auto annihilator = left_nullspace(kp.pk.A);
    if (!annihilator) continue;  // rank-deficient sample
    kp.pk.Aperp = std::move(*annihilator);
    break;
  }
  kp.sk.s = expand_vector(derive_seed(master_seed, "s", 0, sb), params.m, params.q);
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt == 10000)
      throw std::runtime_error("cve_keygen: error weight degenerate for these parameters");
    kp.sk.e = sample_error(derive_seed(master_seed, "e", attempt, sb), params.n, params);
    size_t w = kp.sk.e.weight();
    if (w > 0 && w < params.n) break;
  }
  kp.pk.b = mat_vec_mul(kp.pk.A, kp.sk.s).add(kp.sk.e);
  kp.pk.y = mat_vec_mul(kp.pk.Aperp, kp.sk.e);
  kp.pk.p = static_cast<uint16_t>(kp.sk.e.weight());
  return kp;
}

CveProverState cve_prover_commit(const Params& params, const SecretKey& sk,
                                 const CvePublicKey& pk, const Seed& round_seed,
                                 const CommitmentScheme& com) {
  const size_t sb = params.seed_bytes();
  CveProverState st;
  Seed mask_seed = derive_seed(round_seed, "u", 0, sb);
  st.iso_scale_seed = derive_seed(round_seed, "scale", 0, sb);
  st.iso_perm_seed = derive_seed(round_seed, "perm", 0, sb);
  st.r1 = derive_seed(round_seed, "r1", 0, sb);
  st.r2 = derive_seed(round_seed, "r2", 0, sb);

  st.mask = expand_vector(mask_seed, params.n, params.q);
  st.iso = Isometry::from_seeds(st.iso_scale_seed, st.iso_perm_seed, params.n, params.q);
  st.mask_image = st.iso.apply(st.mask);
  st.error_image = st.iso.apply(sk.e);

  st.coms.c1 = com.commit(c1_preimage(st.iso, mat_vec_mul(pk.Aperp, st.mask)), st.r1);
  st.coms.c2 = com.commit(c2_preimage(st.mask_image, st.error_image), st.r2);
  return st;
}

FqVector cve_prover_blinded_sum(CveProverState& state, const SecretKey& sk, Fq blind) {
  state.blind = blind;
  return state.iso.apply(state.mask.add(sk.e.scaled(blind)));
}

CveResponse cve_prover_respond(const CveProverState& state, int challenge) {
  switch (challenge) {
    case 1:
      return CveResponse1{state.r1, state.iso_scale_seed, state.iso_perm_seed};
    case 2:
      return CveResponse2{state.r2, state.error_image};
    default:
      throw std::invalid_argument("cve: challenge must be 1 or 2");
  }
}

CheckResult cve_verifier_check(const Params& params, const CvePublicKey& pk,
                               const CveCommitMsg& coms, Fq blind, const FqVector& blinded_sum,
                               int challenge, const CveResponse& resp,
                               const CommitmentScheme& com) {
  if (challenge < 1 || challenge > 2) return CheckResult::reject(Reject::Challenge);
  if (blind >= params.q || blinded_sum.size() != params.n || blinded_sum.modulus() != params.q)
    return CheckResult::reject(Reject::Malformed);

  if (challenge == 1) {
    const auto* r = std::get_if<CveResponse1>(&resp);
    if (!r || !seed_len_ok(params, r->open_r1) || !seed_len_ok(params, r->iso_scale_seed) ||
        !seed_len_ok(params, r->iso_perm_seed))
      return CheckResult::reject(Reject::Malformed);
    Isometry iso = Isometry::from_seeds(r->iso_scale_seed, r->iso_perm_seed, params.n, params.q);
    // Aperp iso^-1(beta) - alpha y == Aperp u for an honest prover.
    FqVector syndrome =
        mat_vec_mul(pk.Aperp, iso.apply_inverse(blinded_sum)).sub(pk.y.scaled(blind));
    if (!com.verify(coms.c1, c1_preimage(iso, syndrome), r->open_r1))
      return CheckResult::reject(Reject::Commitment);
    return CheckResult::accept();
  }

  const auto* r = std::get_if<CveResponse2>(&resp);
  if (!r || !seed_len_ok(params, r->open_r2) || r->error_image.size() != params.n ||
      r->error_image.modulus() != params.q)
    return CheckResult::reject(Reject::Malformed);
  if (r->error_image.weight() != pk.p) return CheckResult::reject(Reject::Weight);
  // beta - alpha iso(e) == iso(u) for an honest prover.
  FqVector mask_image = blinded_sum.sub(r->error_image.scaled(blind));
  if (!com.verify(coms.c2, c2_preimage(mask_image, r->error_image), r->open_r2))
    return CheckResult::reject(Reject::Commitment);
  return CheckResult::accept();
}

std::variant<FqVector, CollisionReport> cve_extract(const Params& params, const CvePublicKey& pk,
                                                    const CveTranscript& t1,
                                                    const CveTranscript& t2,
                                                    const CommitmentScheme& com) {
  if (t1.challenge != 1 || t2.challenge != 2)
    throw std::invalid_argument("cve_extract: need one challenge-1 and one challenge-2 transcript");
  if (!(t1.coms == t2.coms))
    throw std::invalid_argument("cve_extract: transcripts do not share commitments");
  for (const CveTranscript* t : {&t1, &t2})
    if (!cve_verifier_check(params, pk, t->coms, t->blind, t->blinded_sum, t->challenge, t->resp,
                            com))
      throw std::invalid_argument("cve_extract: transcript does not verify");

  const auto& ra = std::get<CveResponse1>(t1.resp);
  const auto& rb = std::get<CveResponse2>(t2.resp);
  Isometry iso_a = Isometry::from_seeds(ra.iso_scale_seed, ra.iso_perm_seed, params.n, params.q);

  FqVector candidate = iso_a.apply_inverse(rb.error_image);
  if (mat_vec_mul(pk.Aperp, candidate) == pk.y && candidate.weight() == pk.p) return candidate;

  CollisionReport report;
  report.commitment_index = 0;  // two transcripts open different digests; not attributable
  FqVector syndrome =
      mat_vec_mul(pk.Aperp, iso_a.apply_inverse(t1.blinded_sum)).sub(pk.y.scaled(t1.blind));
  report.first = Opening{c1_preimage(iso_a, syndrome), ra.open_r1};
  report.second =
      Opening{c2_preimage(t2.blinded_sum.sub(rb.error_image.scaled(t2.blind)), rb.error_image),
              rb.open_r2};
  report.detail = candidate.weight() != pk.p
                      ? "extracted error has wrong weight"
                      : "extracted error does not match the public syndrome";
  return report;
}

std::vector<RoundTranscript> cve_simulate(const Params& params, const CvePublicKey& pk,
                                          const ChallengeOracle& oracle, size_t rounds,
                                          const Seed& sim_seed, const CommitmentScheme& com,
                                          const SimOptions& options, SimStats* stats) {
  const size_t sb = params.seed_bytes();
  // Any preimage of the public syndrome answers challenge 1, weight aside.
  auto syndrome_error = solve_particular(pk.Aperp, pk.y);
  if (!syndrome_error) throw std::invalid_argument("cve_simulate: public key has no syndrome preimage");

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
      int guess = int(guess_stream.uniform_below(2)) + 1;

      Seed iso_scale_seed = derive_seed(att, "scale", 0, sb);
      Seed iso_perm_seed = options.fixed_permutation ? Seed{std::vector<uint8_t>(sb, 0)}
                                                     : derive_seed(att, "perm", 0, sb);
      Seed r1 = derive_seed(att, "r1", 0, sb);
      Seed r2 = derive_seed(att, "r2", 0, sb);
      Isometry iso = Isometry::from_seeds(iso_scale_seed, iso_perm_seed, params.n, params.q);
      FqVector mask = expand_vector(derive_seed(att, "u", 0, sb), params.n, params.q);

      auto fake_digest = [&](const char* label) {
        XofStream ds(derive_seed(att, label, 0, sb), Domain::Digest);
        Commitment c;
        c.digest.resize(com.digest_bytes());
        ds.fill(c.digest);
        return c;
      };

      CveCommitMsg coms;
      FqVector fake_error(params.n, params.q);
      CveResponse resp;
      if (guess == 1) {
        fake_error = *syndrome_error;
        coms.c1 = com.commit(c1_preimage(iso, mat_vec_mul(pk.Aperp, mask)), r1);
        coms.c2 = fake_digest("fake2");
        resp = CveResponse1{r1, iso_scale_seed, iso_perm_seed};
      } else {
        fake_error = expand_weight_vector(derive_seed(att, "e", 0, sb), params.n, pk.p, params.q, sb);
        coms.c2 = com.commit(c2_preimage(iso.apply(mask), iso.apply(fake_error)), r2);
        coms.c1 = fake_digest("fake1");
        resp = CveResponse2{r2, iso.apply(fake_error)};
      }

      auto digests = coms.concat_digests();
      ++local.oracle_calls;
      Fq blind = oracle.blind(digests, params.q);
      FqVector blinded_sum = iso.apply(mask.add(fake_error.scaled(blind)));

      std::vector<uint8_t> tape = digests;
      blinded_sum.append_bytes(tape);
      ++local.oracle_calls;
      int ch = oracle.challenge(tape, 2);
      if (ch != guess) continue;

      RoundTranscript t;
      t.scheme_id = static_cast<uint8_t>(SchemeId::Cve);
      t.messages.push_back(make_cve_commit_msg(coms));
      t.messages.push_back(make_alpha_msg(blind));
      t.messages.push_back(make_beta_msg(blinded_sum));
      t.messages.push_back(make_challenge_msg(MsgType::S2Challenge, ch));
      t.messages.push_back(make_cve_response_msg(resp));
      t.verdict = 1;
      out.push_back(std::move(t));
      recorded = true;
      break;
    }
    if (!recorded)
      throw std::runtime_error("cve_simulate: rewind budget of " +
                               std::to_string(options.rewind_budget) + " tries exceeded in round " +
                               std::to_string(round));
  }
  local.rounds = rounds;
  if (stats) *stats = local;
  return out;
}

CveCheater::CveCheater(const Params& params, const CvePublicKey& pk, const Seed& rng_seed,
                       const CommitmentScheme& com) {
  const size_t sb = params.seed_bytes();
  iso_scale_seed_ = derive_seed(rng_seed, "scale", 0, sb);
  iso_perm_seed_ = derive_seed(rng_seed, "perm", 0, sb);
  r1_ = derive_seed(rng_seed, "r1", 0, sb);
  r2_ = derive_seed(rng_seed, "r2", 0, sb);
  iso_ = Isometry::from_seeds(iso_scale_seed_, iso_perm_seed_, params.n, params.q);
  mask_ = expand_vector(derive_seed(rng_seed, "u", 0, sb), params.n, params.q);
  guessed_blind_ = expand_scalar(derive_seed(rng_seed, "alpha", 0, sb), params.q);

  auto pre = solve_particular(pk.Aperp, pk.y);
  if (!pre) throw std::invalid_argument("cve_cheat_round: public key has no syndrome preimage");
  syndrome_error_ = std::move(*pre);
  decoy_error_ = expand_weight_vector(derive_seed(rng_seed, "decoy", 0, sb), params.n, pk.p,
                                      params.q, sb);

  coms_.c1 = com.commit(c1_preimage(iso_, mat_vec_mul(pk.Aperp, mask_)), r1_);
  // c2 is rigged so that beta - alpha* iso(e'') lands on its first half
  // exactly when the verifier's blind equals the guess.
  FqVector rigged_mask_image =
      blinded_sum(guessed_blind_).sub(iso_.apply(decoy_error_).scaled(guessed_blind_));
  coms_.c2 = com.commit(c2_preimage(rigged_mask_image, iso_.apply(decoy_error_)), r2_);
}

FqVector CveCheater::blinded_sum(Fq blind) const {
  return iso_.apply(mask_.add(syndrome_error_.scaled(blind)));
}

CveResponse CveCheater::respond(int challenge) const {
  if (challenge == 1) return CveResponse1{r1_, iso_scale_seed_, iso_perm_seed_};
  if (challenge == 2) return CveResponse2{r2_, iso_.apply(decoy_error_)};
  throw std::invalid_argument("cve: challenge must be 1 or 2");
}

CveCheater cve_cheat_round(const Params& params, const CvePublicKey& pk, const Seed& rng_seed,
                           const CommitmentScheme& com) {
  return CveCheater(params, pk, rng_seed, com);
}

}  // namespace lweid
