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

#include "lweid/protocol.hpp"

#include <vector>

namespace lweid {

const char* scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::Stern: return "stern";
    case SchemeId::Cve: return "cve";
  }
  return "unknown";
}

const char* reject_name(Reject r) {
  switch (r) {
    case Reject::None: return "none";
    case Reject::Commitment: return "commitment";
    case Reject::Weight: return "weight";
    case Reject::Malformed: return "malformed";
    case Reject::Challenge: return "challenge";
    case Reject::Timeout: return "timeout";
    case Reject::Incomplete: return "incomplete";
  }
  return "unknown";
}

namespace {
std::vector<uint8_t> tagged_context(uint8_t kind, std::span<const uint8_t> context) {
  std::vector<uint8_t> out;
  out.reserve(context.size() + 1);
  out.push_back(kind);
  out.insert(out.end(), context.begin(), context.end());
  return out;
}
}  // namespace

int ChallengeOracle::challenge(std::span<const uint8_t> context, int count) const {
  auto ctx = tagged_context(0x01, context);
  XofStream xs(nonce_, Domain::Challenge, ctx);
  return int(xs.uniform_below(static_cast<uint32_t>(count))) + 1;
}

Fq ChallengeOracle::blind(std::span<const uint8_t> context, uint16_t q) const {
  auto ctx = tagged_context(0x02, context);
  XofStream xs(nonce_, Domain::Challenge, ctx);
  return xs.uniform_mod(q);
}

}  // namespace lweid
