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

#include "lweid/prg.hpp"

#include <numeric>
#include <stdexcept>

namespace lweid {

XofStream::XofStream(const Seed& seed, Domain domain) {
  shake_.absorb(seed.bytes);
  uint8_t tag = static_cast<uint8_t>(domain);
  shake_.absorb({&tag, 1});
}

XofStream::XofStream(const Seed& seed, Domain domain, std::span<const uint8_t> context) {
  shake_.absorb(seed.bytes);
  uint8_t tag = static_cast<uint8_t>(domain);
  shake_.absorb({&tag, 1});
  shake_.absorb(context);
}

uint8_t XofStream::next_byte() {
  uint8_t b;
  shake_.squeeze({&b, 1});
  return b;
}

uint16_t XofStream::next_u16() {
  uint8_t b[2];
  shake_.squeeze(b);
  return uint16_t(b[0]) | uint16_t(b[1]) << 8;
}

uint64_t XofStream::next_u64() {
  uint8_t b[8];
  shake_.squeeze(b);
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = v << 8 | b[i];
  return v;
}

void XofStream::fill(std::span<uint8_t> out) { shake_.squeeze(out); }

uint16_t XofStream::uniform_below(uint32_t bound) {
  if (bound == 0 || bound > (1u << 16)) throw std::invalid_argument("uniform_below: bad bound");
  const uint32_t limit = 65536u - 65536u % bound;
  for (;;) {
    uint32_t v = next_u16();
    if (v < limit) return static_cast<uint16_t>(v % bound);
  }
}

FqVector expand_vector(const Seed& seed, size_t len, uint16_t q) {
  XofStream xs(seed, Domain::Vector);
  FqVector out(len, q);
  for (size_t i = 0; i < len; ++i) out[i] = xs.uniform_mod(q);
  return out;
}

FqVector expand_nonzero_vector(const Seed& seed, size_t len, uint16_t q) {
  XofStream xs(seed, Domain::NonzeroVector);
  FqVector out(len, q);
  for (size_t i = 0; i < len; ++i) out[i] = xs.uniform_nonzero(q);
  return out;
}

std::vector<uint16_t> expand_permutation(const Seed& seed, size_t n) {
  XofStream xs(seed, Domain::Permutation);
  std::vector<uint16_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (size_t i = n; i > 1; --i) {
    uint16_t j = xs.uniform_below(static_cast<uint32_t>(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

Fq expand_scalar(const Seed& seed, uint16_t q) {
  XofStream xs(seed, Domain::Scalar);
  return xs.uniform_mod(q);
}

FqMatrix expand_matrix(const Seed& seed, size_t rows, size_t cols, uint16_t q) {
  XofStream xs(seed, Domain::Vector);
  FqMatrix out(rows, cols, q);
  for (Fq& e : out.entries()) e = xs.uniform_mod(q);
  return out;
}

Seed derive_seed(const Seed& parent, std::string_view label, uint64_t index, size_t seed_bytes) {
  std::vector<uint8_t> context;
  context.reserve(label.size() + 8);
  for (char c : label) context.push_back(static_cast<uint8_t>(c));
  for (int i = 0; i < 8; ++i) context.push_back(static_cast<uint8_t>(index >> (8 * i)));
  XofStream xs(parent, Domain::Derive, context);
  Seed child;
  child.bytes.resize(seed_bytes);
  xs.fill(child.bytes);
  return child;
}

FqVector expand_weight_vector(const Seed& seed, size_t len, size_t weight, uint16_t q,
                              size_t seed_bytes) {
  if (weight > len) throw std::invalid_argument("expand_weight_vector: weight exceeds length");
  auto support = expand_permutation(derive_seed(seed, "sup", 0, seed_bytes), len);
  FqVector values = expand_nonzero_vector(derive_seed(seed, "val", 0, seed_bytes), weight, q);
  FqVector out(len, q);
  for (size_t k = 0; k < weight; ++k) out[support[k]] = values[k];
  return out;
}

std::string hex_encode(std::span<const uint8_t> bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

bool hex_decode(std::string_view hex, std::vector<uint8_t>& out) {
  if (hex.size() % 2 != 0) return false;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  out.clear();
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return false;
    out.push_back(static_cast<uint8_t>(hi << 4 | lo));
  }
  return true;
}

}  // namespace lweid
