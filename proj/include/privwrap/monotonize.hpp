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

#ifndef PRIVWRAP_MONOTONIZE_HPP_
#define PRIVWRAP_MONOTONIZE_HPP_

#include "privwrap/blackbox.hpp"
#include "privwrap/lattice.hpp"

#include <vector>

namespace privwrap {

// A function materialized over a down-neighborhood view, with a constant
// value for subsets below the floor size. Tables are computed eagerly in one
// bottom-up lattice pass, so the total base-query cost is the lattice size
// rather than per-query exponential.
struct LatticeTable {
  LatticeView view;
  std::vector<std::vector<double>> values;  // per level, aligned with view
  long long floor_size = 0;                 // kept sizes >= floor are tabulated
  double below_floor = 0.0;                 // value for kept < floor

  double at_node(int level, std::size_t idx) const {
    return values[level][idx];
  }
  // Value at an arbitrary subset of the root (must be within the view or
  // below the floor).
  double at_subset(const Dataset& root, const Dataset& z) const;
};

// out[u] = max over in[w] for all w below u within the view (u included).
std::vector<std::vector<double>> max_over_downset(
    const LatticeView& view, std::vector<std::vector<double>> in);

// Level-`level` monotonization of f: the value at z is the maximum of f over
// subsets of z with at least `level` elements, seeded with inf of the
// declared range. Monotone under inclusion for every f.
LatticeTable monotonize(BlackBox& f, long long level);

// Level-`level` double monotonization: the unfloored transform
// (f(z)+|z|-level)/2 followed by level-`level` monotonization with default
// -level/2. Monotone for every f; requires the range of f within [0, inf).
LatticeTable double_monotonize(BlackBox& f, long long level);

// j-th offset of a monotone table g at the root:
// min over z in DN_j(root) of (g(z) - |z| + |root| - j).
double offset_value(const LatticeTable& g, long long j);
std::vector<double> offset_values(const LatticeTable& g, long long jmax);

}  // namespace privwrap

#endif  // PRIVWRAP_MONOTONIZE_HPP_
