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

#ifndef LWEID_COST_HPP
#define LWEID_COST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lweid/params.hpp"
#include "lweid/protocol.hpp"

namespace lweid {

struct RoundTranscript;

/// Exact rational with int64 terms; the cost expressions stay tiny, so no
/// big-integer backing is needed here.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  friend bool operator==(const Rational&, const Rational&) = default;

  double to_double() const { return double(num) / double(den); }
  bool is_integer() const { return den == 1; }
  /// Decimal rendering, exact for integers, rounded half-up otherwise
  /// (e.g. 7046/3 -> "2348.67" at 2 places).
  std::string decimal(int places = 2) const;
};

/// ceil(log2 v) for v >= 1: bits needed to index v alternatives.
unsigned ceil_log2(uint32_t v);

enum class CostMode : uint8_t {
  PaperFormula,  // the published per-round expressions, verbatim
  Counted,       // this implementation's actual message composition
};

/// Average communication bits per protocol round, split the same way the
/// published accounting splits them. total is always the sum of the parts.
struct CostBreakdown {
  CostMode mode;
  Rational commitments_bits;
  Rational challenge_bits;
  Rational answer_bits_avg;
  Rational total_bits_avg;
};

/// The two modes intentionally disagree for the 3-pass scheme: the
/// published answer term is (10/3)|seed| + (2/3)(m+n) lg q, while counting
/// this implementation's response payloads gives (11/3)|seed| +
/// ((m+2n)/3) lg q. Both are surfaced; see the README.
CostBreakdown cost_model(const Params& params, SchemeId scheme, CostMode mode);

/// Counted-mode composition of one full round for a concrete challenge
/// (commitments, blind and blinded vector where applicable, challenge,
/// response). Items are counted at their information widths: seeds at
/// |seed|, field elements at lg q, digests at |com|. The wire framing
/// itself byte-aligns (2 bytes per element plus frame headers); both
/// figures are reported by the CLI.
Rational counted_bits_for_challenge(const Params& params, SchemeId scheme, int challenge);

/// The same accounting applied to a recorded round's actual messages; the
/// round must parse. Honest executions match counted_bits_for_challenge
/// exactly, which pins the implementation's message composition to the
/// model.
Rational counted_bits_of_round(const Params& params, const RoundTranscript& round);

/// Smallest r with (per-round soundness error)^r <= target. Exact
/// big-integer comparison; target must be in (0, 1).
uint32_t rounds_for_soundness(SchemeId scheme, uint16_t q, const Rational& target);

/// Accepts "2^-16", "1/65536" and plain decimals ("0.5", ".03125").
std::optional<Rational> parse_soundness_target(std::string_view text);

}  // namespace lweid

#endif  // LWEID_COST_HPP
