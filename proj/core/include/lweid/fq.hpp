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

#ifndef LWEID_FQ_HPP
#define LWEID_FQ_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lweid {

/// Canonical residue mod q, always in [0, q).
using Fq = uint16_t;

Fq fq_add(Fq a, Fq b, uint16_t q);
Fq fq_sub(Fq a, Fq b, uint16_t q);
Fq fq_mul(Fq a, Fq b, uint16_t q);
Fq fq_neg(Fq a, uint16_t q);
/// Multiplicative inverse mod prime q; throws for a == 0.
Fq fq_inv(Fq a, uint16_t q);

/// Vector over Z_q. Entries are canonical residues; arithmetic requires
/// matching moduli and lengths and throws std::invalid_argument otherwise.
class FqVector {
 public:
  FqVector() = default;
  FqVector(size_t len, uint16_t q) : q_(q), v_(len, 0) {}
  FqVector(std::initializer_list<int> entries, uint16_t q);
  static FqVector from_ints(std::span<const int> entries, uint16_t q);

  uint16_t modulus() const { return q_; }
  size_t size() const { return v_.size(); }
  Fq operator[](size_t i) const { return v_[i]; }
  Fq& operator[](size_t i) { return v_[i]; }
  std::span<const Fq> elems() const { return v_; }

  FqVector add(const FqVector& other) const;
  FqVector sub(const FqVector& other) const;
  FqVector scaled(Fq factor) const;

  /// Hamming weight: number of nonzero entries.
  size_t weight() const;

  /// Canonical serialization: each entry as 2 bytes little-endian.
  void append_bytes(std::vector<uint8_t>& out) const;
  std::vector<uint8_t> to_bytes() const;
  /// Inverse of append_bytes; returns false on length mismatch or an
  /// out-of-range entry.
  static bool from_bytes(std::span<const uint8_t> in, size_t len, uint16_t q, FqVector& out);

  friend bool operator==(const FqVector&, const FqVector&) = default;

 private:
  uint16_t q_ = 0;
  std::vector<Fq> v_;
};

/// Dense row-major matrix over Z_q.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(size_t rows, size_t cols, uint16_t q) : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static FqMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows, uint16_t q);
  static FqMatrix identity(size_t dim, uint16_t q);

  uint16_t modulus() const { return q_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Fq at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  Fq& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  std::span<const Fq> entries() const { return a_; }
  std::span<Fq> entries() { return a_; }

  FqVector row(size_t r) const;

  void append_bytes(std::vector<uint8_t>& out) const;
  static bool from_bytes(std::span<const uint8_t> in, size_t rows, size_t cols, uint16_t q, FqMatrix& out);

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  uint16_t q_ = 0;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Fq> a_;
};

/// result[i] = sum_j A[i][j] * v[j] mod q.
FqVector mat_vec_mul(const FqMatrix& a, const FqVector& v);

/// Hamming weight of v (free-function spelling of FqVector::weight).
size_t vec_weight(const FqVector& v);

}  // namespace lweid

#endif  // LWEID_FQ_HPP
