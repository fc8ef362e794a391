#include <stdexcept>
#include <string>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "lweid/gaussian.hpp"

using namespace lweid;
using lweid::test::seed_of;

namespace {

// Oracle: direct summation of the truncated pmf, independent of the CDT.
struct TruncatedGaussianMoments {
  double mean = 0.0;
  double variance = 0.0;
};

TruncatedGaussianMoments pmf_moments(double sigma) {
  int tail = int(std::floor(12.0 * sigma));
  long double z = 0.0L, ex = 0.0L, ex2 = 0.0L;
  for (int x = -tail; x <= tail; ++x) {
    long double w = expl(-(long double)(x) * x / (2.0L * sigma * sigma));
    z += w;
    ex += x * w;
    ex2 += (long double)(x)*x * w;
  }
  return {double(ex / z), double(ex2 / z - (ex / z) * (ex / z))};
}

int centered(Fq v, uint16_t q) { return v > q / 2 ? int(v) - q : int(v); }

}  // namespace

TEST_CASE("sample_error is deterministic") {
  Params p = test::small_params(257);
  p.sigma = 3.0;
  FqVector a = sample_error(seed_of("err"), 64, p);
  FqVector b = sample_error(seed_of("err"), 64, p);
  CHECK(a == b);
  CHECK(a.size() == 64);
}

TEST_CASE("vanishing sigma collapses the table to zero") {
  Params p = test::small_params(257);
  p.sigma = 1e-9;
  FqVector v = sample_error(seed_of("tiny"), 100, p);
  CHECK(v.weight() == 0);
}

TEST_CASE("samples stay inside the truncation bound") {
  Params p = test::small_params(257);
  p.sigma = 2.0;
  GaussianCdt table(p.sigma);
  CHECK(table.tail_bound() == 24);
  XofStream xs(seed_of("bound"), Domain::Gauss);
  for (int i = 0; i < 5000; ++i) {
    int x = table.sample(xs);
    CHECK(std::abs(x) <= 24);
  }
}

TEST_CASE("sample moments match the pmf oracle at sigma 3") {
  const double sigma = 3.0;
  auto oracle = pmf_moments(sigma);
  CHECK(std::abs(oracle.mean) < 1e-12);          // symmetric support
  CHECK(oracle.variance == doctest::Approx(sigma * sigma).epsilon(0.01));

  Params p = test::small_params(257);
  p.sigma = sigma;
  const size_t count = 100000;
  FqVector v = sample_error(seed_of("moments"), count, p);
  double sum = 0.0, sum_sq = 0.0;
  for (size_t i = 0; i < count; ++i) {
    int x = centered(v[i], p.q);
    sum += x;
    sum_sq += double(x) * x;
  }
  double mean = sum / double(count);
  double variance = sum_sq / double(count) - mean * mean;
  CHECK(mean > -0.1);
  CHECK(mean < 0.1);
  CHECK(std::abs(variance - oracle.variance) < 0.1 * oracle.variance);
}

TEST_CASE("reduction mod q wraps negatives") {
  Params p = test::small_params(31);
  p.sigma = 2.0;
  FqVector v = sample_error(seed_of("wrap"), 2000, p);
  bool saw_high = false;  // a negative sample lands in (q/2, q)
  for (size_t i = 0; i < v.size(); ++i) {
    CHECK(v[i] < p.q);
    if (v[i] > p.q / 2) saw_high = true;
  }
  CHECK(saw_high);
}
