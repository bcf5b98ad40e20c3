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

#ifndef PRIVWRAP_HARD_INSTANCE_HPP_
#define PRIVWRAP_HARD_INSTANCE_HPP_

#include "privwrap/blackbox.hpp"
#include "privwrap/rng.hpp"

#include <cstdint>
#include <vector>

namespace privwrap {

// Adversarial fixtures over the hypercube {0,1}^n: a "null" cone
// f(z) = max(k - dist(x, z), 0) which is globally 1-Lipschitz, and a
// "planted" pair of cones around centers x, y at odd Hamming distance gamma,
// which violates 1-Lipschitzness whenever max(k, s) > gamma/2. Used as
// privacy stress inputs, closed form (no tables).
struct HardInstance {
  int n = 0;
  std::vector<std::uint8_t> x_bits, y_bits;
  long long k = 0, s = 0;
  bool planted = false;

  // Hamming distance from a bit vector to the instance centers, and the
  // instance value on it.
  double value_on_bits(const std::vector<std::uint8_t>& z) const;

  // The center x as a dataset: elements are the set bit indices, zero-padded
  // so lexicographic element order equals index order.
  Dataset center_dataset() const;

  // Evaluator for datasets whose element ids parse as indices in [0, n).
  Evaluator evaluator() const;
};

// gamma must be odd (so no point is equidistant from both centers),
// gamma <= min(rho, n), 2*alpha must divide rho, and rho >= 4*alpha (so that
// two distinct cone heights exist to draw without replacement).
HardInstance make_hard_instance(int n, long long alpha, long long rho,
                                long long gamma, bool planted,
                                RandomStream& rng);

// The id an index gets inside hard-instance datasets.
ElementId hard_instance_element_id(int index, int n);

}  // namespace privwrap

#endif  // PRIVWRAP_HARD_INSTANCE_HPP_
