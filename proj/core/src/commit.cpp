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

#include "lweid/commit.hpp"

#include <stdexcept>

#include "lweid/keccak.hpp"

namespace lweid {

Commitment HashCommitment::commit(std::span<const uint8_t> message, const Seed& randomness) const {
  if (digest_bytes_ == 0 || digest_bytes_ > 32)
    throw std::invalid_argument("commit: digest length must be 1..32 bytes");
  // H(tag || len64(message) || message || randomness), truncated.
  std::vector<uint8_t> preimage;
  preimage.reserve(9 + message.size() + randomness.bytes.size());
  preimage.push_back(0x43);
  uint64_t len = message.size();
  for (int i = 0; i < 8; ++i) preimage.push_back(static_cast<uint8_t>(len >> (8 * i)));
  preimage.insert(preimage.end(), message.begin(), message.end());
  preimage.insert(preimage.end(), randomness.bytes.begin(), randomness.bytes.end());

  auto full = sha3_256(preimage);
  Commitment c;
  c.digest.assign(full.begin(), full.begin() + digest_bytes_);
  return c;
}

Commitment commit(std::span<const uint8_t> message, const Seed& randomness, const Params& params) {
  return HashCommitment(params).commit(message, randomness);
}

bool verify_opening(const Commitment& c, std::span<const uint8_t> message, const Seed& randomness,
                    const Params& params) {
  return HashCommitment(params).verify(c, message, randomness);
}

}  // namespace lweid
