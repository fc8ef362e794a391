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

#ifndef LWEID_COMMIT_HPP
#define LWEID_COMMIT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lweid/params.hpp"
#include "lweid/prg.hpp"

namespace lweid {

/// Fixed-length commitment digest (com_len/8 bytes).
struct Commitment {
  std::vector<uint8_t> digest;

  friend bool operator==(const Commitment&, const Commitment&) = default;
};

/// Opening of a commitment: the committed bytes and the blinding seed.
struct Opening {
  std::vector<uint8_t> message;
  Seed randomness;

  friend bool operator==(const Opening&, const Opening&) = default;
};

/// String commitment interface. The protocols only depend on commit/verify,
/// so alternative instantiations (e.g. a lattice-based commitment) can be
/// swapped in without touching protocol code.
class CommitmentScheme {
 public:
  virtual ~CommitmentScheme() = default;
  virtual Commitment commit(std::span<const uint8_t> message, const Seed& randomness) const = 0;
  virtual size_t digest_bytes() const = 0;

  bool verify(const Commitment& c, std::span<const uint8_t> message, const Seed& randomness) const {
    return commit(message, randomness) == c;
  }
};

/// Default instantiation: SHA3-256 over a length-framed message plus the
/// randomness, truncated to com_len bits.
class HashCommitment final : public CommitmentScheme {
 public:
  explicit HashCommitment(const Params& params) : digest_bytes_(params.com_bytes()) {}
  explicit HashCommitment(size_t digest_bytes) : digest_bytes_(digest_bytes) {}

  Commitment commit(std::span<const uint8_t> message, const Seed& randomness) const override;
  size_t digest_bytes() const override { return digest_bytes_; }

 private:
  size_t digest_bytes_;
};

Commitment commit(std::span<const uint8_t> message, const Seed& randomness, const Params& params);
bool verify_opening(const Commitment& c, std::span<const uint8_t> message, const Seed& randomness,
                    const Params& params);

}  // namespace lweid

#endif  // LWEID_COMMIT_HPP
