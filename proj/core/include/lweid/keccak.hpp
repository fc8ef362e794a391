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

#ifndef LWEID_KECCAK_HPP
#define LWEID_KECCAK_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lweid {

/// FIPS 202 sponge over Keccak-f[1600]. Absorb any number of times, then
/// squeeze any number of times; absorbing after the first squeeze is a
/// programming error and throws.
class KeccakSponge {
 public:
  KeccakSponge(size_t rate_bytes, uint8_t domain_suffix);

  void absorb(std::span<const uint8_t> data);
  void squeeze(std::span<uint8_t> out);

 private:
  void pad_and_switch();

  std::array<uint64_t, 25> state_{};
  size_t rate_;
  uint8_t suffix_;
  size_t offset_ = 0;
  bool squeezing_ = false;
};

/// SHAKE-128 as an incremental output stream.
class Shake128 {
 public:
  Shake128() : sponge_(168, 0x1f) {}

  Shake128& absorb(std::span<const uint8_t> data) {
    sponge_.absorb(data);
    return *this;
  }
  void squeeze(std::span<uint8_t> out) { sponge_.squeeze(out); }
  std::vector<uint8_t> squeeze(size_t len) {
    std::vector<uint8_t> out(len);
    sponge_.squeeze(out);
    return out;
  }

 private:
  KeccakSponge sponge_;
};

std::array<uint8_t, 32> sha3_256(std::span<const uint8_t> data);

}  // namespace lweid

#endif  // LWEID_KECCAK_HPP
