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

#include "lweid/params.hpp"

#include <stdexcept>
#include <string>

namespace lweid {

bool is_prime(uint32_t v) {
  if (v < 2) return false;
  for (uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

void Params::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("params: " + what); };
  if (n == 0 || m == 0) fail("n and m must be positive");
  if (m >= n) fail("m must be strictly less than n");
  if (q >= (1u << 15)) fail("q must be below 2^15");
  if (!is_prime(q)) fail("q must be prime (got " + std::to_string(q) + ")");
  if (!(sigma > 0.0)) fail("sigma must be positive");
  if (rounds < 1) fail("rounds must be at least 1");
  if (seed_len == 0 || seed_len % 8 != 0) fail("seed_len must be a positive multiple of 8");
  if (com_len == 0 || com_len % 8 != 0) fail("com_len must be a positive multiple of 8");
}

}  // namespace lweid
