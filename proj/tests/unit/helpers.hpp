#ifndef LWEID_TESTS_HELPERS_HPP
#define LWEID_TESTS_HELPERS_HPP

#include <cstdint>
#include <string_view>

#include "lweid/keccak.hpp"
#include "lweid/params.hpp"
#include "lweid/prg.hpp"

namespace lweid::test {

/// Distinct deterministic seeds from short labels.
inline Seed seed_of(std::string_view label, size_t bytes = 16) {
  Shake128 shake;
  shake.absorb(
      std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(label.data()), label.size()));
  return Seed{shake.squeeze(bytes)};
}

inline Params toy_params() {
  Params p;
  p.n = 4;
  p.m = 2;
  p.q = 7;
  p.sigma = 1.0;
  p.rounds = 3;
  return p;
}

inline Params small_params(uint16_t q = 31) {
  Params p;
  p.n = 16;
  p.m = 8;
  p.q = q;
  p.sigma = 2.0;
  p.rounds = 4;
  return p;
}

}  // namespace lweid::test

#endif
