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

// lweid: key generation, TCP identification demo (verifier server / prover
// client), round calculus and cost model, simulator transcript dumps, and
// offline transcript replay.
//
// Exit codes: 0 success, 1 protocol failure, 2 usage or parameter error,
// 3 transport error.

#include <cstdio>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "lweid/codec.hpp"
#include "lweid/cost.hpp"
#include "lweid/harness.hpp"
#include "lweid/keyfile.hpp"
#include "lweid/log.hpp"
#include "lweid/session.hpp"

namespace {

using namespace lweid;

constexpr int kExitSuccess = 0;
constexpr int kExitProtocolFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTransport = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SchemeId parse_scheme(const std::string& name) {
  if (name == "stern") return SchemeId::Stern;
  if (name == "cve") return SchemeId::Cve;
  throw UsageError("unknown scheme '" + name + "' (expected stern or cve)");
}

Seed parse_or_generate_seed(const std::string& hex, size_t seed_bytes) {
  Seed seed;
  if (hex.empty()) {
    std::random_device rd;
    seed.bytes.resize(seed_bytes);
    for (auto& b : seed.bytes) b = static_cast<uint8_t>(rd());
    log_info("generated seed: " + hex_encode(seed.bytes));
    return seed;
  }
  if (!hex_decode(hex, seed.bytes) || seed.bytes.size() != seed_bytes)
    throw UsageError("--seed must be " + std::to_string(2 * seed_bytes) + " hex digits");
  return seed;
}

struct ParamFlags {
  uint32_t n = 0, m = 0, q = 0;
  double sigma = 3.0;
  uint32_t rounds = 0;
  uint32_t seed_len = 128, com_len = 256;

  void attach(CLI::App* cmd, bool need_sigma) {
    cmd->add_option("--n", n, "row dimension n")->required();
    cmd->add_option("--m", m, "secret dimension m (m < n)")->required();
    cmd->add_option("--q", q, "prime modulus q (< 2^15)")->required();
    if (need_sigma)
      cmd->add_option("--sigma", sigma, "error std deviation")->capture_default_str();
    cmd->add_option("--rounds", rounds, "repetition count (default: rounds for 2^-16)");
    cmd->add_option("--seed-len", seed_len, "PRG seed bits")->capture_default_str();
    cmd->add_option("--com-len", com_len, "commitment digest bits")->capture_default_str();
  }

  Params build(SchemeId scheme) const {
    if (n > 0xffff || m > 0xffff || q > 0xffff) throw UsageError("dimension out of range");
    Params p;
    p.n = uint16_t(n);
    p.m = uint16_t(m);
    p.q = uint16_t(q);
    p.sigma = sigma;
    p.seed_len = uint16_t(seed_len);
    p.com_len = uint16_t(com_len);
    p.rounds = 1;  // placeholder for validate(); final value set below
    try {
      p.validate();
      p.rounds = rounds > 0 ? rounds
                            : rounds_for_soundness(scheme, p.q, Rational(1, 65536));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

int cmd_keygen(SchemeId scheme, const ParamFlags& flags, const std::string& seed_hex,
               const std::string& out) {
  Params params = flags.build(scheme);
  Seed master = parse_or_generate_seed(seed_hex, params.seed_bytes());

  uint16_t weight = 0;
  KeyFile pub, full;
  if (scheme == SchemeId::Stern) {
    SternKeyPair kp = stern_keygen(params, master);
    weight = kp.pk.p;
    pub = KeyFile::from_stern(params, kp, false);
    full = KeyFile::from_stern(params, kp, true);
  } else {
    CveKeyPair kp = cve_keygen(params, master);
    weight = kp.pk.p;
    pub = KeyFile::from_cve(params, kp, false);
    full = KeyFile::from_cve(params, kp, true);
  }
  save_keyfile(out + ".pk", pub);
  save_keyfile(out + ".sk", full);
  std::printf("scheme=%s n=%u m=%u q=%u sigma=%g rounds=%u p=%u\n", scheme_name(scheme), params.n,
              params.m, params.q, params.sigma, params.rounds, weight);
  std::printf("wrote %s.pk and %s.sk\n", out.c_str(), out.c_str());
  return kExitSuccess;
}

int cmd_serve(const std::string& pk_path, const std::string& listen, uint32_t rounds,
              const std::string& seed_hex, const std::string& transcript_out) {
  KeyFile key = load_keyfile(pk_path);
  if (key.has_secret())
    throw UsageError("serve expects a public key file (.pk); refusing to load secret material");
  auto hostport = parse_hostport(listen);
  if (!hostport) throw UsageError("--listen expects ADDR:PORT");

  Seed challenge_seed = parse_or_generate_seed(seed_hex, key.params.seed_bytes());
  TcpListener listener = TcpListener::bind(hostport->first, hostport->second);
  log_info("listening on " + hostport->first + ":" + std::to_string(listener.port()));

  TcpMessageChannel channel(listener.accept());
  log_debug("client connected");
  VerifierOutcome outcome =
      run_verifier_session(channel, key, rounds, challenge_seed, !transcript_out.empty());

  if (!transcript_out.empty()) {
    TranscriptFile file;
    file.params = key.params;
    file.params.rounds = rounds;
    file.transcripts = std::move(outcome.transcripts);
    save_transcripts(transcript_out, file);
    log_info("wrote transcripts to " + transcript_out);
  }

  std::printf("%s\n", outcome.success ? "success" : "failure");
  if (!outcome.success) {
    log_error(std::string("session failed: ") + reject_name(outcome.reason) + " after " +
              std::to_string(outcome.rounds_completed) + " accepted round(s)");
    return kExitProtocolFailure;
  }
  return kExitSuccess;
}

int cmd_prove(const std::string& sk_path, const std::string& connect_to,
              const std::string& seed_hex) {
  KeyFile key = load_keyfile(sk_path);
  if (!key.has_secret())
    throw UsageError("prove requires a secret-bearing key file (.sk)");
  auto hostport = parse_hostport(connect_to);
  if (!hostport) throw UsageError("--connect expects ADDR:PORT");
  Seed session_seed = parse_or_generate_seed(seed_hex, key.params.seed_bytes());

  TcpMessageChannel channel(TcpStream::connect(hostport->first, hostport->second));
  ProverOutcome outcome = run_prover_session(channel, key, session_seed);
  if (outcome.completed && outcome.success) {
    log_info("identification accepted");
    return kExitSuccess;
  }
  log_error(std::string("identification failed: ") + reject_name(outcome.reason));
  return kExitProtocolFailure;
}

int cmd_bench(SchemeId scheme, const ParamFlags& flags, const std::string& target_text) {
  auto target = parse_soundness_target(target_text);
  if (!target || target->num <= 0 || target->num >= target->den)
    throw UsageError("--target-soundness must be a probability in (0, 1), e.g. 2^-16");
  Params params = flags.build(scheme);

  uint32_t r = rounds_for_soundness(scheme, params.q, *target);
  if (scheme == SchemeId::Stern)
    std::printf("per-round soundness error: 2/3\n");
  else
    std::printf("per-round soundness error: (q+1)/2q = %u/%u\n", params.q + 1, 2 * params.q);
  std::printf("target: %lld/%lld\n", target->num, target->den);
  std::printf("r = %u\n", r);

  for (CostMode mode : {CostMode::PaperFormula, CostMode::Counted}) {
    CostBreakdown c = cost_model(params, scheme, mode);
    std::printf("cost/round (%s): commitments=%s challenge=%s answer=%s total=%s bits\n",
                mode == CostMode::PaperFormula ? "paper formula" : "counted",
                c.commitments_bits.decimal(2).c_str(), c.challenge_bits.decimal(2).c_str(),
                c.answer_bits_avg.decimal(2).c_str(), c.total_bits_avg.decimal(2).c_str());
  }
  std::printf("session total at r rounds (paper formula): %s bits\n",
              (cost_model(params, scheme, CostMode::PaperFormula).total_bits_avg * Rational(r))
                  .decimal(2)
                  .c_str());
  return kExitSuccess;
}

int cmd_simulate(SchemeId scheme, const ParamFlags& flags, uint32_t rounds,
                 const std::string& seed_hex, const std::string& out,
                 const std::string& pk_out) {
  Params params = flags.build(scheme);
  Seed seed = parse_or_generate_seed(seed_hex, params.seed_bytes());
  const size_t sb = params.seed_bytes();
  HashCommitment com(params);
  ChallengeOracle oracle(derive_seed(seed, "nonce", 0, sb));

  TranscriptFile file;
  file.params = params;
  file.params.rounds = rounds;
  SimStats stats;
  // The simulator works from the public key alone; the secret half is
  // generated here only to have a well-formed instance, then dropped.
  if (scheme == SchemeId::Stern) {
    SternKeyPair kp = stern_keygen(params, derive_seed(seed, "key", 0, sb));
    file.transcripts = stern_simulate(params, kp.pk, oracle, rounds,
                                      derive_seed(seed, "sim", 0, sb), com, {}, &stats);
    if (!pk_out.empty()) save_keyfile(pk_out, KeyFile::from_stern(params, kp, false));
  } else {
    CveKeyPair kp = cve_keygen(params, derive_seed(seed, "key", 0, sb));
    file.transcripts = cve_simulate(params, kp.pk, oracle, rounds,
                                    derive_seed(seed, "sim", 0, sb), com, {}, &stats);
    if (!pk_out.empty()) save_keyfile(pk_out, KeyFile::from_cve(params, kp, false));
  }
  save_transcripts(out, file);
  std::printf("simulated %zu rounds in %llu attempts (%llu oracle calls), wrote %s\n",
              stats.rounds, (unsigned long long)stats.attempts,
              (unsigned long long)stats.oracle_calls, out.c_str());
  return kExitSuccess;
}

int cmd_replay(const std::string& pk_path, const std::string& transcript_path) {
  KeyFile key = load_keyfile(pk_path);
  TranscriptFile file = load_transcripts(transcript_path);
  VerifierOutcome outcome = replay_transcripts(key, file);
  std::printf("%s\n", outcome.success ? "success" : "failure");
  if (!outcome.success) {
    log_error(std::string("replay verdict: ") + reject_name(outcome.reason) + " after " +
              std::to_string(outcome.rounds_completed) + " accepted round(s)");
    return kExitProtocolFailure;
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LWE-based zero-knowledge identification schemes"};
  app.require_subcommand(1);

  std::string scheme_name_flag, seed_hex, out_path, pk_path, sk_path, listen, connect_to,
      transcript_path, transcript_out, target_text;
  uint32_t rounds = 0;
  ParamFlags flags;

  CLI::App* keygen = app.add_subcommand("keygen", "generate a key pair");
  keygen->add_option("--scheme", scheme_name_flag, "stern or cve")->required();
  flags.attach(keygen, true);
  keygen->add_option("--seed", seed_hex, "master seed (hex)");
  keygen->add_option("--out", out_path, "output path stem")->required();

  CLI::App* serve = app.add_subcommand("serve", "run the verifier over TCP (one session)");
  serve->add_option("--pk", pk_path, "public key file")->required();
  serve->add_option("--listen", listen, "ADDR:PORT (port 0 = ephemeral)")->required();
  serve->add_option("--rounds", rounds, "rounds per session")->required();
  serve->add_option("--seed", seed_hex, "challenge seed (hex)");
  serve->add_option("--transcript-out", transcript_out, "capture transcripts to this file");

  CLI::App* prove = app.add_subcommand("prove", "run the prover over TCP");
  prove->add_option("--sk", sk_path, "secret key file")->required();
  prove->add_option("--connect", connect_to, "ADDR:PORT")->required();
  prove->add_option("--seed", seed_hex, "session seed (hex)");

  CLI::App* bench = app.add_subcommand("bench", "round calculus and communication costs");
  bench->add_option("--scheme", scheme_name_flag, "stern or cve")->required();
  bench->add_option("--target-soundness", target_text, "overall soundness bound L")->required();
  flags.attach(bench, false);

  CLI::App* simulate = app.add_subcommand("simulate", "write simulator transcripts to a file");
  simulate->add_option("--scheme", scheme_name_flag, "stern or cve")->required();
  flags.attach(simulate, true);
  simulate->add_option("--sim-rounds", rounds, "number of simulated rounds")->required();
  simulate->add_option("--seed", seed_hex, "simulation seed (hex)");
  simulate->add_option("--out", out_path, "transcript output file")->required();
  std::string sim_pk_out;
  simulate->add_option("--pk-out", sim_pk_out, "also write the matching public key file");

  CLI::App* replay = app.add_subcommand("replay", "re-verify a captured transcript file");
  replay->add_option("--pk", pk_path, "public key file")->required();
  replay->add_option("--transcript", transcript_path, "transcript file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (keygen->parsed())
      return cmd_keygen(parse_scheme(scheme_name_flag), flags, seed_hex, out_path);
    if (serve->parsed()) return cmd_serve(pk_path, listen, rounds, seed_hex, transcript_out);
    if (prove->parsed()) return cmd_prove(sk_path, connect_to, seed_hex);
    if (bench->parsed()) return cmd_bench(parse_scheme(scheme_name_flag), flags, target_text);
    if (simulate->parsed())
      return cmd_simulate(parse_scheme(scheme_name_flag), flags, rounds, seed_hex, out_path,
                          sim_pk_out);
    if (replay->parsed()) return cmd_replay(pk_path, transcript_path);
  } catch (const UsageError& e) {
    log_error(e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    log_error(e.what());
    return kExitUsage;
  } catch (const FileFormatError& e) {
    log_error(e.what());
    return kExitUsage;
  } catch (const NetError& e) {
    log_error(e.what());
    return kExitTransport;
  } catch (const std::exception& e) {
    log_error(e.what());
    return kExitProtocolFailure;
  }
  return kExitUsage;
}
