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

#ifndef PRIVWRAP_AUTOSENSE_HPP_
#define PRIVWRAP_AUTOSENSE_HPP_

#include "privwrap/blackbox.hpp"
#include "privwrap/rng.hpp"
#include "privwrap/shifted_inverse.hpp"
#include "privwrap/wrapper_output.hpp"

namespace privwrap {

struct AutosenseParams {
  double eps = 1.0;
  double delta = 0.0;  // > 0 needs a plugged approximate-DP solver
  double beta = 0.1;
  bool test_constants = false;
  // Locality used in test-constants mode (rounded up to an even value >= 2).
  long long test_lambda = 4;
  const GippSolver* approx_solver = nullptr;
};

// Automated-sensitivity-detection wrapper: releases a noisy floor level,
// monotonizes the black box at that level, and releases a shifted-inverse
// value of the monotonization. Private for every f with the declared finite
// range; accuracy tracks the down sensitivity of f at the configured depth.
WrapperOutput autosense_wrap(BlackBox& f, const AutosenseParams& params,
                             RandomStream& rng);

// The locality the paper-faithful profile runs at, for the given parameters.
long long autosense_lambda(double eps, double beta, std::size_t range_size);

}  // namespace privwrap

#endif  // PRIVWRAP_AUTOSENSE_HPP_
