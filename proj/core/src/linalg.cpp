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

#include "lweid/linalg.hpp"

#include <stdexcept>

namespace lweid {

RrefResult rref(FqMatrix a) {
  const uint16_t q = a.modulus();
  const size_t rows = a.rows(), cols = a.cols();
  std::vector<size_t> pivots;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = pivot_row;
    while (sel < rows && a.at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (size_t j = 0; j < cols; ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
    Fq inv = fq_inv(a.at(pivot_row, col), q);
    for (size_t j = col; j < cols; ++j) a.at(pivot_row, j) = fq_mul(a.at(pivot_row, j), inv, q);
    for (size_t i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      Fq factor = a.at(i, col);
      if (factor == 0) continue;
      for (size_t j = col; j < cols; ++j)
        a.at(i, j) = fq_sub(a.at(i, j), fq_mul(factor, a.at(pivot_row, j), q), q);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(a), std::move(pivots)};
}

size_t matrix_rank(const FqMatrix& a) { return rref(a).pivot_cols.size(); }

namespace {

FqMatrix transpose(const FqMatrix& a) {
  FqMatrix t(a.cols(), a.rows(), a.modulus());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

/// Kernel basis of M (solutions of M x = 0) from its RREF, one basis row
/// per free column.
FqMatrix kernel_basis(const RrefResult& red, size_t ncols) {
  const FqMatrix& r = red.mat;
  const uint16_t q = r.modulus();
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : red.pivot_cols) is_pivot[c] = true;

  std::vector<size_t> free_cols;
  for (size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FqMatrix basis(free_cols.size(), ncols, r.modulus());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t f = free_cols[k];
    basis.at(k, f) = 1;
    for (size_t pi = 0; pi < red.pivot_cols.size(); ++pi)
      basis.at(k, red.pivot_cols[pi]) = fq_neg(r.at(pi, f), q);
  }
  return basis;
}

}  // namespace

std::optional<FqMatrix> left_nullspace(const FqMatrix& a) {
  // Left annihilators of A are the kernel of A^T.
  RrefResult red = rref(transpose(a));
  if (red.pivot_cols.size() < a.cols()) return std::nullopt;  // rank-deficient: resample
  FqMatrix basis = kernel_basis(red, a.rows());
  return rref(std::move(basis)).mat;  // canonical form
}

std::optional<FqVector> solve_particular(const FqMatrix& m, const FqVector& t) {
  if (m.modulus() != t.modulus()) throw std::invalid_argument("solve_particular: modulus mismatch");
  if (m.rows() != t.size()) throw std::invalid_argument("solve_particular: dimension mismatch");
  const uint16_t q = m.modulus();

  FqMatrix aug(m.rows(), m.cols() + 1, q);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = t[i];
  }
  RrefResult red = rref(std::move(aug));
  for (size_t c : red.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // row (0 ... 0 | 1): inconsistent

  FqVector x(m.cols(), q);
  for (size_t pi = 0; pi < red.pivot_cols.size(); ++pi)
    x[red.pivot_cols[pi]] = red.mat.at(pi, m.cols());
  return x;
}

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("mat_mul: modulus mismatch");
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const uint16_t q = a.modulus();
  FqMatrix out(a.rows(), b.cols(), q);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < b.cols(); ++k) {
      uint64_t acc = 0;
      for (size_t j = 0; j < a.cols(); ++j) acc += uint32_t(a.at(i, j)) * b.at(j, k);
      out.at(i, k) = static_cast<Fq>(acc % q);
    }
  return out;
}

}  // namespace lweid
