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

#ifndef LWEID_ISOMETRY_HPP
#define LWEID_ISOMETRY_HPP

#include <cstdint>
#include <vector>

#include "lweid/fq.hpp"
#include "lweid/prg.hpp"

namespace lweid {

/// Hamming-weight-preserving transform: a coordinate permutation composed
/// with nonzero per-coordinate scaling. Linear over Z_q and bijective.
///
/// Convention, used everywhere: perm[i] is the SOURCE index feeding output
/// slot i, i.e. apply(v)[i] = gamma[perm[i]] * v[perm[i]].
class Isometry {
 public:
  Isometry() = default;  // empty; usable only after assignment
  Isometry(FqVector gamma, std::vector<uint16_t> perm);

  static Isometry from_seeds(const Seed& seed_gamma, const Seed& seed_perm, size_t n, uint16_t q);

  size_t size() const { return perm_.size(); }
  const FqVector& gamma() const { return gamma_; }
  const std::vector<uint16_t>& perm() const { return perm_; }

  FqVector apply(const FqVector& v) const;
  FqVector apply_inverse(const FqVector& w) const;

  /// Canonical byte layout (committed and sent on the wire): gamma entries
  /// as 2-byte little-endian each, then the permutation as 2-byte
  /// little-endian 1-based indices.
  std::vector<uint8_t> to_bytes() const;
  void append_bytes(std::vector<uint8_t>& out) const;

  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  FqVector gamma_;
  std::vector<uint16_t> perm_;
};

}  // namespace lweid

#endif  // LWEID_ISOMETRY_HPP
