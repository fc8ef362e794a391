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

#ifndef LWEID_PARAMS_HPP
#define LWEID_PARAMS_HPP

#include <cstddef>
#include <cstdint>

namespace lweid {

/// Instance parameters shared by both identification schemes.
///
/// Field elements are stored as canonical residues in [0, q) with 16-bit
/// storage, so q must be a prime below 2^15. seed_len and com_len are in
/// bits and must be byte-aligned.
struct Params {
  uint16_t n = 0;       // row dimension (length of e, b)
  uint16_t m = 0;       // secret dimension (length of s), m < n
  uint16_t q = 0;       // prime modulus, q < 2^15
  double sigma = 0.0;   // std deviation of the discrete Gaussian error
  uint32_t rounds = 1;  // repetition count r
  uint16_t seed_len = 128;  // PRG seed length in bits
  uint16_t com_len = 256;   // commitment digest length in bits

  size_t seed_bytes() const { return seed_len / 8; }
  size_t com_bytes() const { return com_len / 8; }

  /// Throws std::invalid_argument if any invariant is violated.
  void validate() const;
};

bool is_prime(uint32_t v);

}  // namespace lweid

#endif  // LWEID_PARAMS_HPP
