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

#ifndef PRIVWRAP_NOISE_HPP_
#define PRIVWRAP_NOISE_HPP_

#include "privwrap/common.hpp"
#include "privwrap/rng.hpp"

#include <cmath>

namespace privwrap {

// Laplace draw with density exp(-|x|/scale)/(2*scale), via inverse CDF.
// One uniform per draw; u = 1/2 maps exactly to 0.
inline double sample_laplace(double scale, RandomStream& rng) {
  if (!(scale > 0.0)) throw ParamError("laplace scale must be positive");
  const double u = rng.next_unit_open();
  if (u < 0.5) return scale * std::log(2.0 * u);
  return -scale * std::log(2.0 * (1.0 - u));
}

// Laplace truncated to [-bound, bound], density proportional to
// exp(-|x|/scale) there. Exact inverse CDF; no rejection loop.
inline double sample_truncated_laplace(double scale, double bound,
                                       RandomStream& rng) {
  if (!(scale > 0.0)) throw ParamError("truncated laplace scale must be positive");
  if (!(bound > 0.0)) throw ParamError("truncated laplace bound must be positive");
  const double edge = std::exp(-bound / scale);
  const double mass = 1.0 - edge;  // one-sided unnormalized mass
  const double u = rng.next_unit_open();
  if (u < 0.5) return scale * std::log(edge + 2.0 * u * mass);
  return -scale * std::log(edge + 2.0 * (1.0 - u) * mass);
}

}  // namespace privwrap

#endif  // PRIVWRAP_NOISE_HPP_
