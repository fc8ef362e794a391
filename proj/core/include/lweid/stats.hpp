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

#ifndef LWEID_STATS_HPP
#define LWEID_STATS_HPP

#include <cstdint>
#include <map>
#include <span>

namespace lweid {

/// Upper tail of the chi-square distribution with dof degrees of freedom.
double chi_square_sf(double chi2, size_t dof);

struct Chi2Result {
  double chi2 = 0.0;
  size_t dof = 0;
  double p = 1.0;
};

using CountMap = std::map<int64_t, uint64_t>;

/// Homogeneity test of two samples over the union of observed bins.
/// Symmetric in its arguments; dof = nonempty bins - 1.
Chi2Result chi2_two_sample(const CountMap& a, const CountMap& b);

/// Goodness of fit against the uniform distribution over counts.size() bins.
Chi2Result chi2_uniform_gof(std::span<const uint64_t> counts);

struct BinomialCi {
  double rate = 0.0;
  double low = 0.0;
  double high = 1.0;
};

/// 99% normal-approximation confidence interval for a binomial proportion.
BinomialCi binomial_ci_99(uint64_t successes, uint64_t trials);

}  // namespace lweid

#endif  // LWEID_STATS_HPP
