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

#ifndef PRIVWRAP_EXP_MECH_HPP_
#define PRIVWRAP_EXP_MECH_HPP_

#include "privwrap/rng.hpp"

#include <cstddef>
#include <vector>

namespace privwrap {

// Exponential mechanism over a finite score vector: index j is returned with
// probability proportional to exp(eps * score[j] / (2 * sensitivity)).
// Scores of -infinity are excluded from the support. Log-sum-exp stabilized;
// consumes exactly one uniform draw.
std::size_t exp_mech_finite(const std::vector<double>& scores, double eps,
                            double sensitivity, RandomStream& rng);

// Piecewise-constant score over a closed interval. Pieces partition
// [breakpoints.front(), breakpoints.back()] with scores[i] on
// (breakpoints[i], breakpoints[i+1]).
struct PiecewiseScore {
  std::vector<double> breakpoints;  // strictly increasing, size = pieces + 1
  std::vector<double> scores;       // utility per piece (higher = likelier)
};

// Exponential mechanism over an interval: samples a real with density
// proportional to exp(eps * score(a) / (2 * sensitivity)). Piece selection is
// exact (length-weighted in log space) followed by a uniform draw within the
// piece; the interval itself is never discretized.
double exp_mech_interval(const PiecewiseScore& score, double eps,
                         double sensitivity, RandomStream& rng);

}  // namespace privwrap

#endif  // PRIVWRAP_EXP_MECH_HPP_
