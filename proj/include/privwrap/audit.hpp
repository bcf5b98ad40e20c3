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

#ifndef PRIVWRAP_AUDIT_HPP_
#define PRIVWRAP_AUDIT_HPP_

#include "privwrap/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace privwrap {

// One mechanism evaluation on a fixed dataset; nullopt encodes bottom.
using MechanismSampler = std::function<std::optional<double>(RandomStream&)>;

// Empirical privacy-loss estimate. Heuristic: it reports evidence, never a
// certificate. eps_hat is monotone in bin refinement only up to noise.
struct DpAuditReport {
  double eps_hat = 0.0;      // max corrected |log ratio| over kept bins
  double delta_slack = 0.0;  // prob. mass in dropped (low-count) bins
  std::uint64_t trials = 0;
  int bins = 0;
  double confidence_z = 0.0;
  std::uint64_t min_count = 0;
  std::uint64_t bottoms_a = 0, bottoms_b = 0;
};

// Histograms both samplers' outputs over shared equal-width bins (bottom is
// its own bin), drops bins where either side has fewer than min_count hits
// (their mass is reported as delta_slack), and takes the max over bins of
// |log(p_a/p_b)| minus a z-scaled standard-error correction.
DpAuditReport dp_audit(const MechanismSampler& on_a,
                       const MechanismSampler& on_b, std::uint64_t trials,
                       int bins, RandomStream& rng,
                       std::uint64_t min_count = 20, double z = 2.576);

}  // namespace privwrap

#endif  // PRIVWRAP_AUDIT_HPP_
