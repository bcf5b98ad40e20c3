// Copyright 2026 The Privwrap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privwrap/audit.hpp"

#include "privwrap/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace privwrap {

DpAuditReport dp_audit(const MechanismSampler& on_a,
                       const MechanismSampler& on_b, std::uint64_t trials,
                       int bins, RandomStream& rng, std::uint64_t min_count,
                       double z) {
  if (trials < 10'000) throw ParamError("dp_audit: need at least 10^4 trials");
  if (bins < 2) throw ParamError("dp_audit: need at least 2 bins");

  std::vector<double> va, vb;
  va.reserve(trials);
  vb.reserve(trials);
  DpAuditReport rep;
  rep.trials = trials;
  rep.bins = bins;
  rep.confidence_z = z;
  rep.min_count = min_count;
  for (std::uint64_t t = 0; t < trials; ++t) {
    RandomStream sa = rng.substream(2 * t);
    RandomStream sb = rng.substream(2 * t + 1);
    if (auto v = on_a(sa)) {
      va.push_back(*v);
    } else {
      ++rep.bottoms_a;
    }
    if (auto v = on_b(sb)) {
      vb.push_back(*v);
    } else {
      ++rep.bottoms_b;
    }
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : va) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  for (double v : vb) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const bool any_values = lo <= hi;
  const double width = any_values && hi > lo
                           ? (hi - lo) / static_cast<double>(bins)
                           : 1.0;

  // Bin indices 0..bins-1 for values, bins for bottom.
  std::vector<std::uint64_t> ca(bins + 1, 0), cb(bins + 1, 0);
  auto bin_of = [&](double v) {
    int b = static_cast<int>((v - lo) / width);
    return std::min(std::max(b, 0), bins - 1);
  };
  for (double v : va) ++ca[bin_of(v)];
  for (double v : vb) ++cb[bin_of(v)];
  ca[bins] = rep.bottoms_a;
  cb[bins] = rep.bottoms_b;

  const double nt = static_cast<double>(trials);
  std::uint64_t dropped_a = 0, dropped_b = 0;
  double eps_hat = 0.0;
  for (int j = 0; j <= bins; ++j) {
    if (ca[j] == 0 && cb[j] == 0) continue;
    if (ca[j] < min_count || cb[j] < min_count) {
      dropped_a += ca[j];
      dropped_b += cb[j];
      continue;
    }
    const double pa = static_cast<double>(ca[j]) / nt;
    const double pb = static_cast<double>(cb[j]) / nt;
    const double se =
        std::sqrt((1.0 - pa) / static_cast<double>(ca[j]) +
                  (1.0 - pb) / static_cast<double>(cb[j]));
    const double ratio = std::abs(std::log(pa / pb));
    eps_hat = std::max(eps_hat, std::max(0.0, ratio - z * se));
  }
  rep.eps_hat = eps_hat;
  rep.delta_slack =
      static_cast<double>(std::max(dropped_a, dropped_b)) / nt;
  return rep;
}

}  // namespace privwrap
