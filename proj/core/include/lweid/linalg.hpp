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

#ifndef LWEID_LINALG_HPP
#define LWEID_LINALG_HPP

#include <optional>
#include <vector>

#include "lweid/fq.hpp"

namespace lweid {

struct RrefResult {
  FqMatrix mat;
  std::vector<size_t> pivot_cols;
};

/// Reduced row-echelon form by Gauss-Jordan elimination over Z_q.
RrefResult rref(FqMatrix a);

size_t matrix_rank(const FqMatrix& a);

/// Basis of the left null space of A as an (n - m) x n matrix B with
/// B * A == 0, full row rank, rows in reduced echelon form (canonical).
/// Returns nullopt when rank(A) < cols(A); callers resample A.
std::optional<FqMatrix> left_nullspace(const FqMatrix& a);

/// One solution x of M x = t with free variables set to zero after row
/// reduction; deterministic in (M, t). nullopt when the system is
/// inconsistent.
std::optional<FqVector> solve_particular(const FqMatrix& m, const FqVector& t);

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b);

}  // namespace lweid

#endif  // LWEID_LINALG_HPP
