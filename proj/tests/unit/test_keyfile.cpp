#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"
#include "lweid/keyfile.hpp"

using namespace lweid;
using lweid::test::seed_of;

TEST_CASE("stern key file round trip, public and full") {
  Params p = test::small_params(257);
  p.sigma = 3.0;
  SternKeyPair kp = stern_keygen(p, seed_of("kf"));

  KeyFile pub = KeyFile::from_stern(p, kp, false);
  KeyFile full = KeyFile::from_stern(p, kp, true);

  auto pub_bytes = serialize_keyfile(pub);
  auto full_bytes = serialize_keyfile(full);
  CHECK(pub_bytes.size() < full_bytes.size());

  KeyFile pub2 = deserialize_keyfile(pub_bytes);
  CHECK_FALSE(pub2.has_secret());
  CHECK(pub2.stern_pk() == kp.pk);

  KeyFile full2 = deserialize_keyfile(full_bytes);
  REQUIRE(full2.has_secret());
  CHECK(*full2.secret == kp.sk);
  CHECK(full2.stern_pk() == kp.pk);

  // byte determinism
  CHECK(serialize_keyfile(pub2) == pub_bytes);
}

TEST_CASE("cve key file round trip") {
  Params p = test::small_params(31);
  CveKeyPair kp = cve_keygen(p, seed_of("kfc"));
  auto bytes = serialize_keyfile(KeyFile::from_cve(p, kp, true));
  KeyFile back = deserialize_keyfile(bytes);
  CHECK(back.scheme == SchemeId::Cve);
  CHECK(back.cve_pk() == kp.pk);
  CHECK(*back.secret == kp.sk);
}

TEST_CASE("key file rejects corruption and inconsistency") {
  Params p = test::small_params(31);
  SternKeyPair kp = stern_keygen(p, seed_of("kfx"));
  auto bytes = serialize_keyfile(KeyFile::from_stern(p, kp, true));

  SUBCASE("bad magic") {
    bytes[1] = 'X';
    CHECK_THROWS_AS(deserialize_keyfile(bytes), FileFormatError);
  }
  SUBCASE("bad version") {
    bytes[4] = 0x09;
    CHECK_THROWS_AS(deserialize_keyfile(bytes), FileFormatError);
  }
  SUBCASE("unknown scheme") {
    bytes[5] = 0x07;
    CHECK_THROWS_AS(deserialize_keyfile(bytes), FileFormatError);
  }
  SUBCASE("truncated") {
    bytes.resize(bytes.size() - 1);
    CHECK_THROWS_AS(deserialize_keyfile(bytes), FileFormatError);
  }
  SUBCASE("secret inconsistent with public key") {
    // tamper with the last byte of e (high byte of the final entry is 0
    // for q = 31, so flip the low byte within range)
    bytes[bytes.size() - 2] = uint8_t((bytes[bytes.size() - 2] + 1) % 31);
    CHECK_THROWS_AS(deserialize_keyfile(bytes), FileFormatError);
  }
}

TEST_CASE("save and load through the filesystem") {
  Params p = test::small_params(31);
  CveKeyPair kp = cve_keygen(p, seed_of("kfio"));
  auto path = std::filesystem::temp_directory_path() / "lweid_key_test.sk";
  save_keyfile(path, KeyFile::from_cve(p, kp, true));
  KeyFile back = load_keyfile(path);
  CHECK(back.cve_pk() == kp.pk);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_keyfile(path), FileFormatError);
}
