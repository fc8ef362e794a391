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

#include "lweid/isometry.hpp"

#include <stdexcept>

namespace lweid {

Isometry::Isometry(FqVector gamma, std::vector<uint16_t> perm)
    : gamma_(std::move(gamma)), perm_(std::move(perm)) {
  if (gamma_.size() != perm_.size()) throw std::invalid_argument("isometry: size mismatch");
  for (size_t i = 0; i < gamma_.size(); ++i)
    if (gamma_[i] == 0) throw std::invalid_argument("isometry: gamma entries must be nonzero");
  std::vector<bool> seen(perm_.size(), false);
  for (uint16_t p : perm_) {
    if (p >= perm_.size() || seen[p]) throw std::invalid_argument("isometry: not a permutation");
    seen[p] = true;
  }
}

Isometry Isometry::from_seeds(const Seed& seed_gamma, const Seed& seed_perm, size_t n, uint16_t q) {
  return Isometry(expand_nonzero_vector(seed_gamma, n, q), expand_permutation(seed_perm, n));
}

FqVector Isometry::apply(const FqVector& v) const {
  if (v.size() != perm_.size()) throw std::invalid_argument("isometry: length mismatch");
  const uint16_t q = v.modulus();
  FqVector out(v.size(), q);
  for (size_t i = 0; i < v.size(); ++i) {
    uint16_t src = perm_[i];
    out[i] = fq_mul(gamma_[src], v[src], q);
  }
  return out;
}

FqVector Isometry::apply_inverse(const FqVector& w) const {
  if (w.size() != perm_.size()) throw std::invalid_argument("isometry: length mismatch");
  const uint16_t q = w.modulus();
  FqVector out(w.size(), q);
  for (size_t i = 0; i < w.size(); ++i) {
    uint16_t src = perm_[i];
    out[src] = fq_mul(fq_inv(gamma_[src], q), w[i], q);
  }
  return out;
}

void Isometry::append_bytes(std::vector<uint8_t>& out) const {
  gamma_.append_bytes(out);
  for (uint16_t p : perm_) {
    uint16_t one_based = static_cast<uint16_t>(p + 1);
    out.push_back(static_cast<uint8_t>(one_based & 0xff));
    out.push_back(static_cast<uint8_t>(one_based >> 8));
  }
}

std::vector<uint8_t> Isometry::to_bytes() const {
  std::vector<uint8_t> out;
  out.reserve(4 * perm_.size());
  append_bytes(out);
  return out;
}

}  // namespace lweid
