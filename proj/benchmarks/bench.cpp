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

#include <benchmark/benchmark.h>

#include "lweid/commit.hpp"
#include "lweid/cve.hpp"
#include "lweid/gaussian.hpp"
#include "lweid/linalg.hpp"
#include "lweid/stern.hpp"

namespace {

using namespace lweid;

Seed bench_seed(uint8_t fill) { return Seed{std::vector<uint8_t>(16, fill)}; }

Params bench_params() {
  Params p;
  p.n = 128;
  p.m = 64;
  p.q = 257;
  p.sigma = 3.0;
  p.rounds = 28;
  return p;
}

void BM_Shake128Squeeze(benchmark::State& state) {
  std::vector<uint8_t> out(size_t(state.range(0)));
  for (auto _ : state) {
    Shake128 shake;
    shake.absorb(bench_seed(1).bytes);
    shake.squeeze(out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Shake128Squeeze)->Arg(168)->Arg(4096)->Arg(1 << 20);

void BM_Sha3Commit(benchmark::State& state) {
  Params p = bench_params();
  HashCommitment com(p);
  std::vector<uint8_t> msg(size_t(state.range(0)), 0xab);
  Seed r = bench_seed(2);
  for (auto _ : state) benchmark::DoNotOptimize(com.commit(msg, r));
  state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Sha3Commit)->Arg(64)->Arg(512);

void BM_MatVecMul(benchmark::State& state) {
  uint16_t q = 257;
  size_t n = size_t(state.range(0)), m = n / 2;
  FqMatrix a = expand_matrix(bench_seed(3), n, m, q);
  FqVector v = expand_vector(bench_seed(4), m, q);
  for (auto _ : state) benchmark::DoNotOptimize(mat_vec_mul(a, v));
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n * m));
}
BENCHMARK(BM_MatVecMul)->Arg(64)->Arg(128)->Arg(256);

void BM_LeftNullspace(benchmark::State& state) {
  size_t n = size_t(state.range(0)), m = n / 2;
  FqMatrix a = expand_matrix(bench_seed(5), n, m, 257);
  for (auto _ : state) benchmark::DoNotOptimize(left_nullspace(a));
}
BENCHMARK(BM_LeftNullspace)->Arg(64)->Arg(128);

void BM_GaussianSample(benchmark::State& state) {
  Params p = bench_params();
  for (auto _ : state) benchmark::DoNotOptimize(sample_error(bench_seed(6), p.n, p));
  state.SetItemsProcessed(int64_t(state.iterations()) * p.n);
}
BENCHMARK(BM_GaussianSample);

void BM_SternKeygen(benchmark::State& state) {
  Params p = bench_params();
  for (auto _ : state) benchmark::DoNotOptimize(stern_keygen(p, bench_seed(7)));
}
BENCHMARK(BM_SternKeygen);

void BM_SternRound(benchmark::State& state) {
  Params p = bench_params();
  SternKeyPair kp = stern_keygen(p, bench_seed(8));
  HashCommitment com(p);
  uint64_t round = 0;
  for (auto _ : state) {
    Seed round_seed = derive_seed(bench_seed(9), "round", round++, p.seed_bytes());
    SternProverState st = stern_prover_commit(p, kp.sk, kp.pk, round_seed, com);
    int ch = 1 + int(round % 3);
    SternResponse resp = stern_prover_respond(st, ch, kp.sk);
    benchmark::DoNotOptimize(stern_verifier_check(p, kp.pk, st.coms, ch, resp, com));
  }
}
BENCHMARK(BM_SternRound);

void BM_CveRound(benchmark::State& state) {
  Params p = bench_params();
  CveKeyPair kp = cve_keygen(p, bench_seed(10));
  HashCommitment com(p);
  uint64_t round = 0;
  for (auto _ : state) {
    Seed round_seed = derive_seed(bench_seed(11), "round", round++, p.seed_bytes());
    CveProverState st = cve_prover_commit(p, kp.sk, kp.pk, round_seed, com);
    Fq blind = Fq(round % p.q);
    FqVector blinded = cve_prover_blinded_sum(st, kp.sk, blind);
    int ch = 1 + int(round % 2);
    CveResponse resp = cve_prover_respond(st, ch);
    benchmark::DoNotOptimize(
        cve_verifier_check(p, kp.pk, st.coms, blind, blinded, ch, resp, com));
  }
}
BENCHMARK(BM_CveRound);

}  // namespace

BENCHMARK_MAIN();
