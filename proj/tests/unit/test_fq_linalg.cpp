#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lweid/fq.hpp"
#include "lweid/linalg.hpp"
#include "lweid/prg.hpp"

using namespace lweid;
using lweid::test::seed_of;

TEST_CASE("params validation") {
  Params p = test::small_params();
  CHECK_NOTHROW(p.validate());
  p.q = 256;  // not prime
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = test::small_params();
  p.m = p.n;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = test::small_params();
  p.seed_len = 100;  // not byte-aligned
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = test::small_params();
  p.sigma = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = test::small_params();
  p.q = 32771;  // prime but >= 2^15
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("mat_vec_mul on the worked examples") {
  FqVector v({1, 5, 6}, 7);
  CHECK(mat_vec_mul(FqMatrix::identity(3, 7), v) == v);

  FqMatrix a = FqMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}, {0, 1}}, 7);
  CHECK(mat_vec_mul(a, FqVector({1, 2}, 7)) == FqVector({5, 4, 3, 2}, 7));

  FqMatrix zero(2, 2, 7);
  CHECK(mat_vec_mul(zero, FqVector({3, 4}, 7)) == FqVector({0, 0}, 7));
}

TEST_CASE("mat_vec_mul rejects mismatched shapes") {
  FqMatrix a = FqMatrix::identity(3, 7);
  CHECK_THROWS_AS(mat_vec_mul(a, FqVector(2, 7)), std::invalid_argument);
  CHECK_THROWS_AS(mat_vec_mul(a, FqVector(3, 11)), std::invalid_argument);
}

TEST_CASE("vec_weight") {
  CHECK(vec_weight(FqVector({0, 0, 0}, 7)) == 0);
  CHECK(vec_weight(FqVector({0, 1, 0, 0}, 7)) == 1);
  CHECK(vec_weight(FqVector({6, 0, 2}, 7)) == 2);
}

TEST_CASE("matrix-vector multiplication is additive") {
  XofStream dims(seed_of("linalg-dims"), Domain::Vector);
  for (int iter = 0; iter < 10000; ++iter) {
    uint16_t q = (iter % 2 == 0) ? 31 : 7;
    size_t rows = 1 + dims.uniform_below(6), cols = 1 + dims.uniform_below(6);
    FqMatrix a = expand_matrix(seed_of("A" + std::to_string(iter)), rows, cols, q);
    FqVector u = expand_vector(seed_of("u" + std::to_string(iter)), cols, q);
    FqVector v = expand_vector(seed_of("v" + std::to_string(iter)), cols, q);
    CHECK(mat_vec_mul(a, u.add(v)) == mat_vec_mul(a, u).add(mat_vec_mul(a, v)));
  }
}

namespace {

// Independent oracle: enumerate all of F_q^n and keep the left annihilators
// of A. Only usable for tiny q^n.
std::vector<FqVector> brute_force_left_kernel(const FqMatrix& a) {
  const uint16_t q = a.modulus();
  const size_t n = a.rows();
  std::vector<FqVector> kernel;
  std::vector<Fq> x(n, 0);
  for (;;) {
    FqVector cand(n, q);
    for (size_t i = 0; i < n; ++i) cand[i] = x[i];
    bool annihilates = true;
    for (size_t c = 0; c < a.cols() && annihilates; ++c) {
      uint64_t acc = 0;
      for (size_t i = 0; i < n; ++i) acc += uint32_t(cand[i]) * a.at(i, c);
      annihilates = acc % q == 0;
    }
    if (annihilates) kernel.push_back(cand);
    size_t pos = 0;
    while (pos < n && ++x[pos] == q) x[pos++] = 0;
    if (pos == n) break;
  }
  return kernel;
}

bool in_row_space(const FqMatrix& basis, const FqVector& v) {
  FqMatrix stacked(basis.rows() + 1, basis.cols(), basis.modulus());
  for (size_t i = 0; i < basis.rows(); ++i)
    for (size_t j = 0; j < basis.cols(); ++j) stacked.at(i, j) = basis.at(i, j);
  for (size_t j = 0; j < basis.cols(); ++j) stacked.at(basis.rows(), j) = v[j];
  return matrix_rank(stacked) == matrix_rank(basis);
}

}  // namespace

TEST_CASE("left_nullspace on the worked example, against brute force") {
  FqMatrix a = FqMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}, {0, 1}}, 7);
  auto perp = left_nullspace(a);
  REQUIRE(perp.has_value());
  CHECK(perp->rows() == 2);
  CHECK(perp->cols() == 4);

  // Canonical reduced echelon basis as computed by the elimination oracle.
  CHECK(*perp == FqMatrix::from_rows({{1, 0, 4, 2}, {0, 1, 5, 1}}, 7));

  // Defining properties against full enumeration of F_7^4.
  auto kernel = brute_force_left_kernel(a);
  CHECK(kernel.size() == 49);  // q^(n-m) elements
  for (const auto& v : kernel) CHECK(in_row_space(*perp, v));
  FqMatrix prod = mat_mul(*perp, a);
  for (Fq e : prod.entries()) CHECK(e == 0);
}

TEST_CASE("left_nullspace coordinate-subspace case") {
  // A = first m columns of I_n: annihilator is the last n-m rows of I_n.
  const size_t n = 5, m = 2;
  FqMatrix a(n, m, 7);
  for (size_t j = 0; j < m; ++j) a.at(j, j) = 1;
  auto perp = left_nullspace(a);
  REQUIRE(perp.has_value());
  FqMatrix expected(n - m, n, 7);
  for (size_t i = 0; i < n - m; ++i) expected.at(i, m + i) = 1;
  CHECK(*perp == expected);
}

TEST_CASE("left_nullspace defining property on random instances") {
  const uint16_t primes[] = {7, 31, 257};
  for (int iter = 0; iter < 300; ++iter) {
    uint16_t q = primes[iter % 3];
    size_t m = 2 + iter % 4;
    size_t n = m + 1 + iter % 5;
    FqMatrix a = expand_matrix(seed_of("perp" + std::to_string(iter)), n, m, q);
    auto perp = left_nullspace(a);
    if (!perp) {
      CHECK(matrix_rank(a) < m);
      continue;
    }
    CHECK(perp->rows() == n - m);
    CHECK(matrix_rank(*perp) == n - m);
    FqMatrix prod = mat_mul(*perp, a);
    for (Fq e : prod.entries()) CHECK(e == 0);
  }
}

TEST_CASE("left_nullspace signals rank-deficient input") {
  FqMatrix a(3, 2, 7);  // zero matrix has rank 0 < 2
  CHECK_FALSE(left_nullspace(a).has_value());
}

TEST_CASE("solve_particular") {
  FqMatrix m1 = FqMatrix::from_rows({{1, 1}}, 7);
  auto x = solve_particular(m1, FqVector({3}, 7));
  REQUIRE(x.has_value());
  CHECK(*x == FqVector({3, 0}, 7));  // free variable pinned to zero

  FqMatrix eye = FqMatrix::identity(4, 31);
  FqVector t({5, 17, 0, 30}, 31);
  CHECK(*solve_particular(eye, t) == t);

  FqMatrix m2 = FqMatrix::from_rows({{4, 1, 0, 2}, {2, 0, 1, 4}}, 7);
  FqVector t2({1, 0}, 7);
  auto x2 = solve_particular(m2, t2);
  REQUIRE(x2.has_value());
  CHECK(mat_vec_mul(m2, *x2) == t2);

  // inconsistent system
  FqMatrix m3 = FqMatrix::from_rows({{1, 1}, {2, 2}}, 7);
  CHECK_FALSE(solve_particular(m3, FqVector({1, 3}, 7)).has_value());

  // deterministic, and always a solution when consistent
  for (int iter = 0; iter < 500; ++iter) {
    FqMatrix m = expand_matrix(seed_of("sp" + std::to_string(iter)), 3, 5, 31);
    FqVector w = expand_vector(seed_of("spw" + std::to_string(iter)), 5, 31);
    FqVector t = mat_vec_mul(m, w);  // consistent by construction
    auto sol = solve_particular(m, t);
    REQUIRE(sol.has_value());
    CHECK(mat_vec_mul(m, *sol) == t);
    CHECK(*solve_particular(m, t) == *sol);
  }
}

TEST_CASE("serialization round trip and range rejection") {
  FqVector v({1, 30, 0, 16}, 31);
  auto bytes = v.to_bytes();
  CHECK(bytes.size() == 8);
  FqVector back;
  REQUIRE(FqVector::from_bytes(bytes, 4, 31, back));
  CHECK(back == v);
  bytes[0] = 31;  // out of canonical range
  bytes[1] = 0;
  CHECK_FALSE(FqVector::from_bytes(bytes, 4, 31, back));
}
