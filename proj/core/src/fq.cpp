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

#include "lweid/fq.hpp"

#include <stdexcept>

namespace lweid {

Fq fq_add(Fq a, Fq b, uint16_t q) {
  uint32_t s = uint32_t(a) + b;
  if (s >= q) s -= q;
  return static_cast<Fq>(s);
}

Fq fq_sub(Fq a, Fq b, uint16_t q) {
  uint32_t s = uint32_t(a) + q - b;
  if (s >= q) s -= q;
  return static_cast<Fq>(s);
}

Fq fq_mul(Fq a, Fq b, uint16_t q) { return static_cast<Fq>(uint32_t(a) * b % q); }

Fq fq_neg(Fq a, uint16_t q) { return a == 0 ? 0 : static_cast<Fq>(q - a); }

Fq fq_inv(Fq a, uint16_t q) {
  if (a == 0) throw std::invalid_argument("fq_inv: zero has no inverse");
  // a^(q-2) mod q, q prime
  uint32_t result = 1, base = a, exp = q - 2u;
  while (exp > 0) {
    if (exp & 1) result = result * base % q;
    base = base * base % q;
    exp >>= 1;
  }
  return static_cast<Fq>(result);
}

namespace {
Fq reduce_int(int v, uint16_t q) {
  int r = v % int(q);
  if (r < 0) r += q;
  return static_cast<Fq>(r);
}
void require_same_shape(const FqVector& a, const FqVector& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("fq: modulus mismatch");
  if (a.size() != b.size()) throw std::invalid_argument("fq: length mismatch");
}
}  // namespace

FqVector::FqVector(std::initializer_list<int> entries, uint16_t q) : q_(q) {
  v_.reserve(entries.size());
  for (int e : entries) v_.push_back(reduce_int(e, q));
}

FqVector FqVector::from_ints(std::span<const int> entries, uint16_t q) {
  FqVector out(entries.size(), q);
  for (size_t i = 0; i < entries.size(); ++i) out[i] = reduce_int(entries[i], q);
  return out;
}

FqVector FqVector::add(const FqVector& other) const {
  require_same_shape(*this, other);
  FqVector out(size(), q_);
  for (size_t i = 0; i < size(); ++i) out[i] = fq_add(v_[i], other[i], q_);
  return out;
}

FqVector FqVector::sub(const FqVector& other) const {
  require_same_shape(*this, other);
  FqVector out(size(), q_);
  for (size_t i = 0; i < size(); ++i) out[i] = fq_sub(v_[i], other[i], q_);
  return out;
}

FqVector FqVector::scaled(Fq factor) const {
  FqVector out(size(), q_);
  for (size_t i = 0; i < size(); ++i) out[i] = fq_mul(v_[i], factor, q_);
  return out;
}

size_t FqVector::weight() const {
  size_t w = 0;
  for (Fq e : v_) w += (e != 0);
  return w;
}

void FqVector::append_bytes(std::vector<uint8_t>& out) const {
  for (Fq e : v_) {
    out.push_back(static_cast<uint8_t>(e & 0xff));
    out.push_back(static_cast<uint8_t>(e >> 8));
  }
}

std::vector<uint8_t> FqVector::to_bytes() const {
  std::vector<uint8_t> out;
  out.reserve(2 * size());
  append_bytes(out);
  return out;
}

bool FqVector::from_bytes(std::span<const uint8_t> in, size_t len, uint16_t q, FqVector& out) {
  if (in.size() != 2 * len) return false;
  out = FqVector(len, q);
  for (size_t i = 0; i < len; ++i) {
    uint16_t e = uint16_t(in[2 * i]) | uint16_t(in[2 * i + 1]) << 8;
    if (e >= q) return false;
    out[i] = e;
  }
  return true;
}

FqMatrix FqMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows, uint16_t q) {
  size_t r = rows.size();
  size_t c = r == 0 ? 0 : rows.begin()->size();
  FqMatrix out(r, c, q);
  size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("fq: ragged rows");
    size_t j = 0;
    for (int e : row) out.at(i, j++) = reduce_int(e, q);
    ++i;
  }
  return out;
}

FqMatrix FqMatrix::identity(size_t dim, uint16_t q) {
  FqMatrix out(dim, dim, q);
  for (size_t i = 0; i < dim; ++i) out.at(i, i) = 1;
  return out;
}

FqVector FqMatrix::row(size_t r) const {
  FqVector out(cols_, q_);
  for (size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

void FqMatrix::append_bytes(std::vector<uint8_t>& out) const {
  for (Fq e : a_) {
    out.push_back(static_cast<uint8_t>(e & 0xff));
    out.push_back(static_cast<uint8_t>(e >> 8));
  }
}

bool FqMatrix::from_bytes(std::span<const uint8_t> in, size_t rows, size_t cols, uint16_t q,
                          FqMatrix& out) {
  if (in.size() != 2 * rows * cols) return false;
  out = FqMatrix(rows, cols, q);
  auto entries = out.entries();
  for (size_t i = 0; i < rows * cols; ++i) {
    uint16_t e = uint16_t(in[2 * i]) | uint16_t(in[2 * i + 1]) << 8;
    if (e >= q) return false;
    entries[i] = e;
  }
  return true;
}

FqVector mat_vec_mul(const FqMatrix& a, const FqVector& v) {
  if (a.modulus() != v.modulus()) throw std::invalid_argument("mat_vec_mul: modulus mismatch");
  if (a.cols() != v.size()) throw std::invalid_argument("mat_vec_mul: dimension mismatch");
  const uint16_t q = a.modulus();
  FqVector out(a.rows(), q);
  for (size_t i = 0; i < a.rows(); ++i) {
    uint64_t acc = 0;  // rows*q^2 stays far below 2^64 for q < 2^15
    for (size_t j = 0; j < a.cols(); ++j) acc += uint32_t(a.at(i, j)) * v[j];
    out[i] = static_cast<Fq>(acc % q);
  }
  return out;
}

size_t vec_weight(const FqVector& v) { return v.weight(); }

}  // namespace lweid
