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

#ifndef PRIVWRAP_STABILITY_HPP_
#define PRIVWRAP_STABILITY_HPP_

#include "privwrap/blackbox.hpp"
#include "privwrap/lattice.hpp"

#include <optional>
#include <vector>

namespace privwrap {

// Precomputed stability structure for one function over one down lattice.
// A subset u is stable iff |u| >= floor_level and no lattice edge inside u
// with lower endpoint of size >= floor_level changes the function by more
// than lipschitz_c. Violating edges are found in a single bottom-up pass;
// per-candidate stability then reduces to flag lookups.
struct StabilityContext {
  const LatticeView* view = nullptr;
  std::vector<std::vector<double>> values;  // function values per node
  double lipschitz_c = 1.0;
  double floor_level = 0.0;                  // may be fractional or negative
  std::optional<double> sentinel;            // inf of the range; nullopt = -inf
  std::vector<std::vector<char>> stable;
  std::vector<double> suffix_max;            // max stable value over levels <= j
  long long max_stable = 0;                  // size of the largest stable subset
};

// The view must cover levels down to the floor (view.depth() >=
// root - max(ceil(floor_level), 0)). Throws ParamError if floor_level
// exceeds the root size (no stable subset exists).
StabilityContext build_stability(const LatticeView& view,
                                 std::vector<std::vector<double>> values,
                                 double lipschitz_c, double floor_level,
                                 std::optional<double> sentinel);

bool is_stable_node(const StabilityContext& ctx, int level, std::size_t idx);
// Stability of an arbitrary subset of the root (must lie within the view).
bool is_stable_subset(const StabilityContext& ctx, const Dataset& root,
                      const Dataset& u);

struct StabilizationValue {
  bool empty = false;   // no stable subset of the requested size: sentinel case
  double value = 0.0;   // valid iff !empty (or sentinel if one is declared)
};

// Max of the context function over stable subsets of size >= min_size
// (effectively over size >= max(min_size, floor)).
StabilizationValue stabilize(const StabilityContext& ctx, double min_size);

long long max_stable_size(const StabilityContext& ctx);

// Average of the stabilization over the tau+1 sizes {m - tau, ..., m}; the
// exact mean, never a sample. All terms are nonempty by downward closure.
double proxy_t(const StabilityContext& ctx, long long tau);

// Removal key of the kept-lexicographically-least stable node at a level.
std::uint64_t lex_least_stable_key(const StabilityContext& ctx, int level);

// Conditional monotonizations (pointwise; one base query per query).
// Plain: (f(x)+|x|)/2. Level variant: (f(x)+|x|-level)/2, optionally floored
// at the range infimum.
BlackBox cond_monotonize(BlackBox& f);
BlackBox cond_monotonize_level(BlackBox& f, long long level, bool floored);

// Nested exact average over floors ell in {n-2tau..n-tau} and sizes
// h in {n-tau..n} of the stabilization of the floored level-ell conditional
// monotonization of the (already unit-rescaled) values. range_lo is the
// infimum of the rescaled range (the flooring constant and empty sentinel).
double proxy_p(const LatticeView& view,
               const std::vector<std::vector<double>>& unit_values,
               long long tau, double range_lo);

// Convenience: builds the view/values at depth min(2 tau, |root|) from the
// box and evaluates proxy_p.
double proxy_p_box(BlackBox& f_unit, long long tau);

}  // namespace privwrap

#endif  // PRIVWRAP_STABILITY_HPP_
