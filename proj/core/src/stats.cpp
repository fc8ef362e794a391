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

#include "lweid/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <set>
#include <stdexcept>

namespace lweid {

double chi_square_sf(double chi2, size_t dof) {
  if (dof == 0) return 1.0;
  if (chi2 <= 0.0) return 1.0;
  // Survival function of chi-square(k) is Q(k/2, x/2).
  return boost::math::gamma_q(double(dof) / 2.0, chi2 / 2.0);
}

Chi2Result chi2_two_sample(const CountMap& a, const CountMap& b) {
  uint64_t total_a = 0, total_b = 0;
  std::set<int64_t> bins;
  for (const auto& [k, c] : a) {
    total_a += c;
    if (c > 0) bins.insert(k);
  }
  for (const auto& [k, c] : b) {
    total_b += c;
    if (c > 0) bins.insert(k);
  }
  Chi2Result out;
  if (bins.size() < 2 || total_a == 0 || total_b == 0) return out;  // nothing to compare

  const double grand = double(total_a) + double(total_b);
  for (int64_t bin : bins) {
    auto count_of = [bin](const CountMap& m) -> double {
      auto it = m.find(bin);
      return it == m.end() ? 0.0 : double(it->second);
    };
    double oa = count_of(a), ob = count_of(b);
    double col = oa + ob;
    double ea = col * double(total_a) / grand;
    double eb = col * double(total_b) / grand;
    out.chi2 += (oa - ea) * (oa - ea) / ea;
    out.chi2 += (ob - eb) * (ob - eb) / eb;
  }
  out.dof = bins.size() - 1;
  out.p = chi_square_sf(out.chi2, out.dof);
  return out;
}

Chi2Result chi2_uniform_gof(std::span<const uint64_t> counts) {
  Chi2Result out;
  if (counts.size() < 2) return out;
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  if (total == 0) return out;
  const double expected = double(total) / double(counts.size());
  for (uint64_t c : counts) {
    double d = double(c) - expected;
    out.chi2 += d * d / expected;
  }
  out.dof = counts.size() - 1;
  out.p = chi_square_sf(out.chi2, out.dof);
  return out;
}

BinomialCi binomial_ci_99(uint64_t successes, uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("binomial_ci_99: zero trials");
  constexpr double z = 2.5758293035489004;  // 99.5th percentile of N(0,1)
  BinomialCi out;
  out.rate = double(successes) / double(trials);
  double half = z * std::sqrt(out.rate * (1.0 - out.rate) / double(trials));
  out.low = std::max(0.0, out.rate - half);
  out.high = std::min(1.0, out.rate + half);
  return out;
}

}  // namespace lweid
