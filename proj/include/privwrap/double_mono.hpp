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

#ifndef PRIVWRAP_DOUBLE_MONO_HPP_
#define PRIVWRAP_DOUBLE_MONO_HPP_

#include "privwrap/blackbox.hpp"
#include "privwrap/rng.hpp"
#include "privwrap/wrapper_output.hpp"

#include <vector>

namespace privwrap {

// Number of data points in y that must be changed before a becomes a median
// of the list: max(0, ceil(m/2) - #{y_i <= a}, ceil(m/2) - #{y_i >= a}).
long long median_change_score(double a, const std::vector<double>& sorted_y);

// Samples from [lo, hi] with density proportional to
// exp(-(eps0/2) * median_change_score(a; y)).
double median_exp_mech(const std::vector<double>& y, double eps0, double lo,
                       double hi, RandomStream& rng);

struct DoubleMonoParams {
  double eps = 1.0;
  double beta = 0.1;
  double r = 1.0;  // range [0, r]; requires r >= (16/eps) ln(4r/beta)
};

// Pure-DP wrapper for bounded-range functions with unbiased,
// exponentially-tailed noise when f is Lipschitz. Releases a noisy size w,
// double-monotonizes f at the derived floor, and releases a private median
// of the offset values.
WrapperOutput double_mono_wrap(BlackBox& f, const DoubleMonoParams& params,
                               RandomStream& rng);

}  // namespace privwrap

#endif  // PRIVWRAP_DOUBLE_MONO_HPP_
