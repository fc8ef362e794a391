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

#include "lweid/gaussian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lweid {

GaussianCdt::GaussianCdt(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian: sigma must be positive");
  tail_ = static_cast<int>(std::floor(12.0 * sigma));

  const long double two_sigma_sq = 2.0L * static_cast<long double>(sigma) * sigma;
  std::vector<long double> weight(2 * tail_ + 1);
  long double total = 0.0L;
  for (int x = -tail_; x <= tail_; ++x) {
    long double w = expl(-static_cast<long double>(x) * x / two_sigma_sq);
    weight[x + tail_] = w;
    total += w;
  }

  cum_.resize(weight.size());
  const long double scale = 18446744073709551616.0L;  // 2^64
  long double running = 0.0L;
  for (size_t k = 0; k < weight.size(); ++k) {
    running += weight[k];
    long double t = running / total * scale;
    cum_[k] = t >= scale ? std::numeric_limits<uint64_t>::max()
                         : static_cast<uint64_t>(t);
  }
  cum_.back() = std::numeric_limits<uint64_t>::max();
}

int GaussianCdt::sample(XofStream& stream) const {
  uint64_t u = stream.next_u64();
  size_t lo = 0, hi = cum_.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (u <= cum_[mid])
      hi = mid;
    else
      lo = mid + 1;
  }
  return static_cast<int>(lo) - tail_;
}

FqVector sample_error(const Seed& seed, size_t len, const Params& params) {
  GaussianCdt table(params.sigma);
  XofStream xs(seed, Domain::Gauss);
  FqVector out(len, params.q);
  for (size_t i = 0; i < len; ++i) {
    int x = table.sample(xs);
    int r = x % int(params.q);
    if (r < 0) r += params.q;
    out[i] = static_cast<Fq>(r);
  }
  return out;
}

}  // namespace lweid
