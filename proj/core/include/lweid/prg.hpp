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

#ifndef LWEID_PRG_HPP
#define LWEID_PRG_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lweid/fq.hpp"
#include "lweid/keccak.hpp"

namespace lweid {

/// Opaque PRG seed of seed_len/8 bytes. Every random value in the protocols
/// is expanded from one of these, so transcripts are reproducible and seeds
/// can stand in for the values they expand to on the wire.
struct Seed {
  std::vector<uint8_t> bytes;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Domain-separation tags. The PRG stream for a usage class is
/// SHAKE-128(seed || tag [|| context]).
enum class Domain : uint8_t {
  Vector = 0x01,
  NonzeroVector = 0x02,
  Permutation = 0x03,
  Scalar = 0x04,
  Gauss = 0x05,
  Derive = 0x06,
  Digest = 0x07,
  Challenge = 0x08,
};

/// Deterministic byte stream: SHAKE-128 keyed by seed plus a domain tag.
/// Values of bounded range come out via rejection sampling on 16-bit
/// little-endian draws, so the stream is exactly reproducible from (seed,
/// domain) alone.
class XofStream {
 public:
  XofStream(const Seed& seed, Domain domain);
  XofStream(const Seed& seed, Domain domain, std::span<const uint8_t> context);

  uint8_t next_byte();
  uint16_t next_u16();
  uint64_t next_u64();
  void fill(std::span<uint8_t> out);

  /// Uniform in [0, bound), bound in [1, 2^16].
  uint16_t uniform_below(uint32_t bound);
  /// Uniform in [0, q).
  Fq uniform_mod(uint16_t q) { return uniform_below(q); }
  /// Uniform in [1, q).
  Fq uniform_nonzero(uint16_t q) { return static_cast<Fq>(uniform_below(q - 1u) + 1u); }

 private:
  Shake128 shake_;
};

FqVector expand_vector(const Seed& seed, size_t len, uint16_t q);
FqVector expand_nonzero_vector(const Seed& seed, size_t len, uint16_t q);
/// Fisher-Yates permutation of {0..n-1} driven by the Permutation stream.
std::vector<uint16_t> expand_permutation(const Seed& seed, size_t n);
Fq expand_scalar(const Seed& seed, uint16_t q);
/// Row-major rows x cols matrix from the Vector stream.
FqMatrix expand_matrix(const Seed& seed, size_t rows, size_t cols, uint16_t q);

/// Child seed of seed_bytes length, separated by an ASCII label and an index.
Seed derive_seed(const Seed& parent, std::string_view label, uint64_t index, size_t seed_bytes);

/// Uniform vector of Hamming weight exactly `weight`: support from a
/// Fisher-Yates shuffle, values uniform in [1, q).
FqVector expand_weight_vector(const Seed& seed, size_t len, size_t weight, uint16_t q,
                              size_t seed_bytes);

std::string hex_encode(std::span<const uint8_t> bytes);
bool hex_decode(std::string_view hex, std::vector<uint8_t>& out);

}  // namespace lweid

#endif  // LWEID_PRG_HPP
