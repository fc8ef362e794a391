#include <stdexcept>
#include <thread>

#include "doctest.h"
#include "helpers.hpp"
#include "lweid/codec.hpp"
#include "lweid/keyfile.hpp"
#include "lweid/session.hpp"

using namespace lweid;
using lweid::test::seed_of;

namespace {

struct LiveRun {
  VerifierOutcome verifier;
  ProverOutcome prover;
};

LiveRun run_loopback(const KeyFile& server_key, const KeyFile& client_key, uint32_t rounds,
                     bool capture = false) {
  TcpListener listener = TcpListener::bind("127.0.0.1", 0);
  LiveRun out;
  std::thread server([&] {
    TcpMessageChannel channel(listener.accept());
    out.verifier = run_verifier_session(channel, server_key, rounds, seed_of("vseed"), capture);
  });
  TcpMessageChannel client(TcpStream::connect("127.0.0.1", listener.port()));
  out.prover = run_prover_session(client, client_key, seed_of("pseed"));
  server.join();
  return out;
}

}  // namespace

TEST_CASE("honest loopback session succeeds for both schemes") {
  Params p = test::small_params(31);
  SternKeyPair stern_kp = stern_keygen(p, seed_of("netstern"));
  KeyFile stern_pub = KeyFile::from_stern(p, stern_kp, false);
  KeyFile stern_full = KeyFile::from_stern(p, stern_kp, true);

  LiveRun stern_run = run_loopback(stern_pub, stern_full, 8);
  CHECK(stern_run.verifier.success);
  CHECK(stern_run.verifier.rounds_completed == 8);
  CHECK(stern_run.prover.completed);
  CHECK(stern_run.prover.success);

  CveKeyPair cve_kp = cve_keygen(p, seed_of("netcve"));
  LiveRun cve_run =
      run_loopback(KeyFile::from_cve(p, cve_kp, false), KeyFile::from_cve(p, cve_kp, true), 8);
  CHECK(cve_run.verifier.success);
  CHECK(cve_run.prover.success);
}

TEST_CASE("mismatched public key fails at the first round") {
  Params p = test::small_params(31);
  SternKeyPair kp_a = stern_keygen(p, seed_of("identity-a"));
  SternKeyPair kp_b = stern_keygen(p, seed_of("identity-b"));

  LiveRun run = run_loopback(KeyFile::from_stern(p, kp_a, false),
                             KeyFile::from_stern(p, kp_b, true), 8);
  CHECK_FALSE(run.verifier.success);
  CHECK(run.verifier.rounds_completed == 0);
  CHECK(run.verifier.reason == Reject::Commitment);
  CHECK_FALSE(run.prover.success);
  CHECK_FALSE(run.prover.completed);
}

TEST_CASE("prover session refuses a public-only key file") {
  Params p = test::small_params(31);
  SternKeyPair kp = stern_keygen(p, seed_of("noidentity"));
  KeyFile pub = KeyFile::from_stern(p, kp, false);
  TcpListener listener = TcpListener::bind("127.0.0.1", 0);
  std::thread server([&] {
    try {
      TcpMessageChannel channel(listener.accept());
      (void)channel.recv();
    } catch (...) {
    }
  });
  {
    TcpMessageChannel client(TcpStream::connect("127.0.0.1", listener.port()));
    CHECK_THROWS_AS(run_prover_session(client, pub, seed_of("p")), std::invalid_argument);
  }  // closing the socket unblocks the server thread
  server.join();
}

TEST_CASE("malformed frame injection is rejected with reason malformed") {
  Params p = test::small_params(31);
  SternKeyPair kp = stern_keygen(p, seed_of("inject"));
  KeyFile pub = KeyFile::from_stern(p, kp, false);

  TcpListener listener = TcpListener::bind("127.0.0.1", 0);
  VerifierOutcome outcome;
  std::thread server([&] {
    TcpMessageChannel channel(listener.accept());
    outcome = run_verifier_session(channel, pub, 4, seed_of("vseed"));
  });

  TcpStream raw = TcpStream::connect("127.0.0.1", listener.port());
  raw.set_recv_timeout(kMessageTimeout);
  // consume the key announcement frame
  std::array<uint8_t, kFrameHeaderBytes> header;
  raw.recv_exact(header);
  auto [tag, len] = decode_frame_header(std::span<const uint8_t, kFrameHeaderBytes>(header));
  CHECK(tag == MsgType::Key);
  std::vector<uint8_t> payload(len);
  raw.recv_exact(payload);
  // then inject a frame with an unknown tag
  std::vector<uint8_t> garbage = {0x7f, 0, 0, 0, 1, 0xaa};
  raw.send_all(garbage);
  server.join();

  CHECK_FALSE(outcome.success);
  CHECK(outcome.reason == Reject::Malformed);
}

TEST_CASE("wrong-size commit payload is rejected as malformed, not fatal") {
  Params p = test::small_params(31);
  SternKeyPair kp = stern_keygen(p, seed_of("short"));
  KeyFile pub = KeyFile::from_stern(p, kp, false);

  TcpListener listener = TcpListener::bind("127.0.0.1", 0);
  VerifierOutcome outcome;
  std::thread server([&] {
    TcpMessageChannel channel(listener.accept());
    outcome = run_verifier_session(channel, pub, 4, seed_of("vseed"));
  });
  TcpMessageChannel client(TcpStream::connect("127.0.0.1", listener.port()));
  (void)client.recv();  // key announcement
  client.send({MsgType::S1Commit, std::vector<uint8_t>(7, 0)});  // wrong length
  WireMessage result = client.recv();
  server.join();

  auto parsed = parse_result_msg(result);
  REQUIRE(parsed);
  CHECK_FALSE(parsed->success);
  CHECK(outcome.reason == Reject::Malformed);
}

TEST_CASE("captured transcripts replay to the same verdict") {
  Params p = test::small_params(31);
  p.rounds = 6;
  CveKeyPair kp = cve_keygen(p, seed_of("replay"));
  KeyFile pub = KeyFile::from_cve(p, kp, false);
  KeyFile full = KeyFile::from_cve(p, kp, true);

  LiveRun run = run_loopback(pub, full, p.rounds, /*capture=*/true);
  REQUIRE(run.verifier.success);
  REQUIRE(run.verifier.transcripts.size() == p.rounds);

  TranscriptFile file;
  file.params = p;
  file.transcripts = run.verifier.transcripts;

  // byte-stable through serialization
  TranscriptFile reloaded = deserialize_transcripts(serialize_transcripts(file));
  VerifierOutcome replay = replay_transcripts(pub, reloaded);
  CHECK(replay.success == run.verifier.success);
  CHECK(replay.rounds_completed == run.verifier.rounds_completed);

  // a tampered round flips the verdict
  reloaded.transcripts[2].messages[2].payload[0] ^= 1;
  VerifierOutcome tampered = replay_transcripts(pub, reloaded);
  CHECK_FALSE(tampered.success);
}

TEST_CASE("sessions run in parallel over shared immutable keys") {
  Params p = test::small_params(31);
  SternKeyPair kp = stern_keygen(p, seed_of("parallel"));
  KeyFile pub = KeyFile::from_stern(p, kp, false);
  KeyFile full = KeyFile::from_stern(p, kp, true);

  constexpr int kSessions = 4;
  TcpListener listeners[kSessions];
  for (auto& l : listeners) l = TcpListener::bind("127.0.0.1", 0);

  VerifierOutcome outcomes[kSessions];
  std::vector<std::thread> threads;
  for (int i = 0; i < kSessions; ++i) {
    threads.emplace_back([&, i] {
      TcpMessageChannel channel(listeners[i].accept());
      outcomes[i] =
          run_verifier_session(channel, pub, 6, seed_of("pv" + std::to_string(i)));
    });
    threads.emplace_back([&, i] {
      TcpMessageChannel channel(TcpStream::connect("127.0.0.1", listeners[i].port()));
      ProverOutcome prover = run_prover_session(channel, full, seed_of("pp" + std::to_string(i)));
      CHECK(prover.success);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& outcome : outcomes) CHECK(outcome.success);
}

TEST_CASE("recv distinguishes timeout from transport errors") {
  TcpListener listener = TcpListener::bind("127.0.0.1", 0);
  std::thread server([&] {
    TcpStream peer = listener.accept();
    // hold the connection open without sending, then drop it
    std::this_thread::sleep_for(std::chrono::milliseconds(200));
  });
  TcpStream client = TcpStream::connect("127.0.0.1", listener.port());
  client.set_recv_timeout(std::chrono::milliseconds(50));
  uint8_t byte;
  try {
    client.recv_exact({&byte, 1});
    FAIL("recv should not have produced data");
  } catch (const NetError& e) {
    CHECK(e.kind() == NetError::Kind::Timeout);
  }
  server.join();
  // peer closed: now a transport error, not a timeout
  client.set_recv_timeout(std::chrono::milliseconds(1000));
  try {
    client.recv_exact({&byte, 1});
    FAIL("recv should not have produced data");
  } catch (const NetError& e) {
    CHECK(e.kind() == NetError::Kind::Transport);
  }
}

TEST_CASE("parse_hostport") {
  auto hp = parse_hostport("127.0.0.1:4433");
  REQUIRE(hp);
  CHECK(hp->first == "127.0.0.1");
  CHECK(hp->second == 4433);
  CHECK(parse_hostport(":9000")->first == "0.0.0.0");
  CHECK_FALSE(parse_hostport("127.0.0.1"));
  CHECK_FALSE(parse_hostport("127.0.0.1:"));
  CHECK_FALSE(parse_hostport("127.0.0.1:99999"));
}
