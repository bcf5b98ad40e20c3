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

#ifndef PRIVWRAP_WRAPPERS_HPP_
#define PRIVWRAP_WRAPPERS_HPP_

#include "privwrap/blackbox.hpp"
#include "privwrap/rng.hpp"
#include "privwrap/wrapper_output.hpp"

namespace privwrap {

struct SubsetExtensionParams {
  double eps = 1.0;
  double delta = 0.05;
  double c = 1.0;  // claimed Lipschitz constant
  bool test_constants = false;
};

// Subset-extension wrapper: releases a noisy floor, tests (with noise) that a
// large stable subset exists, and on success releases a rescaled average of
// stabilizations of the conditional monotonization of f/c, plus Laplace
// noise. Private for every f and every c; when f is c-Lipschitz the output
// is f(x) + c * Lap(10 q / eps0) and the test never fires.
WrapperOutput subset_extension(BlackBox& f, const SubsetExtensionParams& params,
                               RandomStream& rng);

struct TahoeParams {
  double eps = 1.0;
  double delta = 0.05;
  double c = 1.0;
  bool test_constants = false;
};

// Stable-subset release: picks the lexicographically least largest stable
// subset and returns its value with Laplace noise, or bottom when no stable
// subset of the drawn size exists.
WrapperOutput modified_tahoe(BlackBox& f, const TahoeParams& params,
                             RandomStream& rng);

struct SmallDiameterParams {
  double eps = 1.0;
  double r = 1.0;  // declared range diameter, range [0, r]
  double c = 1.0;
};

// Pure-DP wrapper for bounded-range functions; queries stay within
// DN_{2 tau}(x) for tau = 3 ceil(r/c). When f is c-Lipschitz the output is
// f(x) + c * Lap(10/eps).
WrapperOutput small_diameter(BlackBox& f, const SmallDiameterParams& params,
                             RandomStream& rng);

struct LipschitzFilterParams {
  double r = 1.0;
  double c = 1.0;
};

struct LipschitzFilterResult {
  double value = 0.0;
  std::uint64_t queries = 0;
  int realized_depth = 0;
};

// Deterministic local Lipschitz reconstruction: equals f(x) whenever f is
// c-Lipschitz on DN_{r/c}(x), and the reconstructed function is 14c-Lipschitz
// for every f with range [0, r].
LipschitzFilterResult lipschitz_filter(BlackBox& f,
                                       const LipschitzFilterParams& params);

}  // namespace privwrap

#endif  // PRIVWRAP_WRAPPERS_HPP_
