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

#include "lweid/keccak.hpp"

#include <bit>
#include <stdexcept>

namespace lweid {
namespace {

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

constexpr int kRhoOffsets[25] = {0,  1,  62, 28, 27, 36, 44, 6,  55, 20, 3, 10, 43,
                                 25, 39, 41, 45, 15, 21, 8,  18, 2,  61, 56, 14};

void keccak_f1600(std::array<uint64_t, 25>& a) {
  for (int round = 0; round < 24; ++round) {
    // theta
    uint64_t c[5];
    for (int x = 0; x < 5; ++x)
      c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    for (int x = 0; x < 5; ++x) {
      uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
      for (int y = 0; y < 5; ++y) a[x + 5 * y] ^= d;
    }
    // rho + pi
    uint64_t b[25];
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        b[y + 5 * ((2 * x + 3 * y) % 5)] = std::rotl(a[x + 5 * y], kRhoOffsets[x + 5 * y]);
    // chi
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        a[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
    // iota
    a[0] ^= kRoundConstants[round];
  }
}

}  // namespace

KeccakSponge::KeccakSponge(size_t rate_bytes, uint8_t domain_suffix)
    : rate_(rate_bytes), suffix_(domain_suffix) {}

void KeccakSponge::absorb(std::span<const uint8_t> data) {
  if (squeezing_) throw std::logic_error("keccak: absorb after squeeze");
  for (uint8_t byte : data) {
    state_[offset_ / 8] ^= static_cast<uint64_t>(byte) << (8 * (offset_ % 8));
    if (++offset_ == rate_) {
      keccak_f1600(state_);
      offset_ = 0;
    }
  }
}

void KeccakSponge::pad_and_switch() {
  state_[offset_ / 8] ^= static_cast<uint64_t>(suffix_) << (8 * (offset_ % 8));
  state_[(rate_ - 1) / 8] ^= 0x80ULL << (8 * ((rate_ - 1) % 8));
  keccak_f1600(state_);
  offset_ = 0;
  squeezing_ = true;
}

void KeccakSponge::squeeze(std::span<uint8_t> out) {
  if (!squeezing_) pad_and_switch();
  for (uint8_t& byte : out) {
    if (offset_ == rate_) {
      keccak_f1600(state_);
      offset_ = 0;
    }
    byte = static_cast<uint8_t>(state_[offset_ / 8] >> (8 * (offset_ % 8)));
    ++offset_;
  }
}

std::array<uint8_t, 32> sha3_256(std::span<const uint8_t> data) {
  KeccakSponge sponge(136, 0x06);
  sponge.absorb(data);
  std::array<uint8_t, 32> digest;
  sponge.squeeze(digest);
  return digest;
}

}  // namespace lweid
