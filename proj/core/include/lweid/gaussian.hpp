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

#ifndef LWEID_GAUSSIAN_HPP
#define LWEID_GAUSSIAN_HPP

#include <cstdint>
#include <vector>

#include "lweid/fq.hpp"
#include "lweid/params.hpp"
#include "lweid/prg.hpp"

namespace lweid {

/// Cumulative distribution table for the discrete Gaussian on Z with
/// p(x) proportional to exp(-x^2 / 2 sigma^2), truncated at |x| <= 12 sigma.
/// One 64-bit draw maps to one signed sample by inverse CDF lookup.
class GaussianCdt {
 public:
  explicit GaussianCdt(double sigma);

  int sample(XofStream& stream) const;
  int tail_bound() const { return tail_; }

 private:
  int tail_;                         // B = floor(12 sigma); support is [-B, B]
  std::vector<uint64_t> cum_;        // cum_[k] = threshold for value k - B
};

/// Error vector of the given length: i.i.d. discrete Gaussian samples
/// reduced mod q, expanded deterministically from the seed.
FqVector sample_error(const Seed& seed, size_t len, const Params& params);

}  // namespace lweid

#endif  // LWEID_GAUSSIAN_HPP
