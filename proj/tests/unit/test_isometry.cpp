#include <stdexcept>
#include <string>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "lweid/isometry.hpp"

using namespace lweid;
using lweid::test::seed_of;

TEST_CASE("identity isometry") {
  Isometry id(FqVector({1, 1, 1}, 7), {0, 1, 2});
  FqVector v({3, 0, 5}, 7);
  CHECK(id.apply(v) == v);
  CHECK(id.apply_inverse(v) == v);
}

TEST_CASE("worked example over F_7") {
  // scale (2,3,4); source order 2,3,1 (1-based): out = (6, 0, 2).
  Isometry iso(FqVector({2, 3, 4}, 7), {1, 2, 0});
  FqVector v({1, 2, 0}, 7);
  FqVector image = iso.apply(v);
  CHECK(image == FqVector({6, 0, 2}, 7));
  CHECK(image.weight() == v.weight());
  CHECK(iso.apply_inverse(image) == v);
}

TEST_CASE("construction rejects invalid components") {
  CHECK_THROWS_AS(Isometry(FqVector({0, 1}, 7), {0, 1}), std::invalid_argument);  // zero scale
  CHECK_THROWS_AS(Isometry(FqVector({1, 1}, 7), {0, 0}), std::invalid_argument);  // not bijective
  CHECK_THROWS_AS(Isometry(FqVector({1, 1, 1}, 7), {0, 1}), std::invalid_argument);
}

TEST_CASE("from_seeds is deterministic with the advertised structure") {
  Seed sg = seed_of("scale"), sp = seed_of("perm");
  Isometry a = Isometry::from_seeds(sg, sp, 32, 31);
  Isometry b = Isometry::from_seeds(sg, sp, 32, 31);
  CHECK(a == b);
  for (size_t i = 0; i < 32; ++i) {
    CHECK(a.gamma()[i] >= 1);
    CHECK(a.gamma()[i] < 31);
  }
}

TEST_CASE("weight preservation, linearity, additivity, bijectivity") {
  for (int iter = 0; iter < 10000; ++iter) {
    std::string tag = std::to_string(iter);
    uint16_t q = iter % 2 ? 7 : 31;
    size_t n = 1 + iter % 12;
    Isometry iso = Isometry::from_seeds(seed_of("g" + tag), seed_of("p" + tag), n, q);
    FqVector u = expand_vector(seed_of("u" + tag), n, q);
    FqVector v = expand_vector(seed_of("v" + tag), n, q);
    Fq scalar = expand_scalar(seed_of("a" + tag), q);

    CHECK(iso.apply(v).weight() == v.weight());
    CHECK(iso.apply(v.scaled(scalar)) == iso.apply(v).scaled(scalar));
    CHECK(iso.apply(u.add(v)) == iso.apply(u).add(iso.apply(v)));
    CHECK(iso.apply_inverse(iso.apply(v)) == v);
  }
}

TEST_CASE("canonical serialization layout") {
  // scale entries little-endian, then 1-based source indices.
  Isometry iso(FqVector({2, 3, 4}, 7), {1, 2, 0});
  auto bytes = iso.to_bytes();
  CHECK(bytes == std::vector<uint8_t>{2, 0, 3, 0, 4, 0, 2, 0, 3, 0, 1, 0});
}
