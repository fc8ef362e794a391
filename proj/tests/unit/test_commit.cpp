#include <stdexcept>
#include <string>
#include "doctest.h"
#include "helpers.hpp"
#include "lweid/commit.hpp"

using namespace lweid;
using lweid::test::seed_of;

TEST_CASE("commitment determinism and digest length") {
  Params p = test::small_params();
  std::vector<uint8_t> msg = {1, 2, 3};
  Seed r = seed_of("r");
  Commitment a = commit(msg, r, p);
  Commitment b = commit(msg, r, p);
  CHECK(a == b);
  CHECK(a.digest.size() == p.com_bytes());

  Commitment empty = commit({}, r, p);
  CHECK(empty.digest.size() == p.com_bytes());
  CHECK_FALSE(empty == a);
}

TEST_CASE("one-byte message difference changes the digest") {
  Params p = test::small_params();
  Seed r = seed_of("r");
  std::vector<uint8_t> m1 = {10, 20, 30, 40};
  std::vector<uint8_t> m2 = m1;
  m2[2] ^= 1;
  CHECK_FALSE(commit(m1, r, p) == commit(m2, r, p));
}

TEST_CASE("verify_opening accepts honest openings only") {
  Params p = test::small_params();
  Seed r = seed_of("r"), r2 = seed_of("r2");
  std::vector<uint8_t> msg = {5, 6, 7};
  Commitment c = commit(msg, r, p);
  CHECK(verify_opening(c, msg, r, p));
  CHECK_FALSE(verify_opening(c, msg, r2, p));
  auto extended = msg;
  extended.push_back(0x00);
  CHECK_FALSE(verify_opening(c, extended, r, p));
}

TEST_CASE("single-bit perturbations never verify") {
  Params p = test::small_params();
  for (int iter = 0; iter < 10000; ++iter) {
    std::string tag = std::to_string(iter);
    Seed r = seed_of("cr" + tag);
    XofStream xs(seed_of("cm" + tag), Domain::Vector);
    std::vector<uint8_t> msg(1 + xs.uniform_below(24));
    xs.fill(msg);
    Commitment c = commit(msg, r, p);

    size_t bit = xs.uniform_below(uint32_t(8 * msg.size()));
    std::vector<uint8_t> tampered = msg;
    tampered[bit / 8] ^= uint8_t(1u << (bit % 8));
    CHECK_FALSE(verify_opening(c, tampered, r, p));

    Seed tampered_r = r;
    size_t rbit = xs.uniform_below(uint32_t(8 * r.bytes.size()));
    tampered_r.bytes[rbit / 8] ^= uint8_t(1u << (rbit % 8));
    CHECK_FALSE(verify_opening(c, msg, tampered_r, p));
  }
}

TEST_CASE("digest length tracks com_len, independent of message size") {
  Params p = test::small_params();
  p.com_len = 128;
  HashCommitment com(p);
  CHECK(com.commit(std::vector<uint8_t>(1000, 0xab), seed_of("r")).digest.size() == 16);
  CHECK(com.commit({}, seed_of("r")).digest.size() == 16);
}
