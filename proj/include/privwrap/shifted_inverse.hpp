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

#ifndef PRIVWRAP_SHIFTED_INVERSE_HPP_
#define PRIVWRAP_SHIFTED_INVERSE_HPP_

#include "privwrap/blackbox.hpp"
#include "privwrap/monotonize.hpp"
#include "privwrap/rng.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace privwrap {

// Smallest number of removals from the root until f drops to <= y, searched
// level by level over DN_{cap-1}(root) with early exit; returns cap if no
// subset at depth < cap qualifies (the exact value past the threshold never
// matters to the callers).
long long inverse_loss(BlackBox& f, long long cap, double y);

// Same search over a materialized table (no base queries).
long long inverse_loss_table(const LatticeTable& t, long long cap, double y);

// Index-monotone score vector for a private interior-point search:
// g[j] = max(0, 1 - loss(y_j)/(lambda+1)), nondecreasing in j when the
// underlying function is monotone; sensitivity 1/(lambda+1) per removal.
struct GippInstance {
  std::vector<double> g;  // g[j-1] holds g(x, j), j = 1..k
  double sensitivity;
};

GippInstance build_gipp(BlackBox& f, const std::vector<double>& ys,
                        long long lambda);
GippInstance build_gipp_table(const LatticeTable& t,
                              const std::vector<double>& ys, long long lambda);

// Solver plug point. The pure-DP exponential-mechanism solver ships; an
// approximate-DP solver can be plugged in behind the same contract.
class GippSolver {
 public:
  virtual ~GippSolver() = default;
  virtual std::string name() const = 0;
  // Returns j in [1, k]; samples with weight exp(eps * score_j / (2 Delta))
  // for score_j = min(g(x,j), 1 - g(x,j-1)) or per the implementation.
  virtual std::size_t solve(const GippInstance& inst, double eps,
                            RandomStream& rng) const = 0;
};

class PureDpExpMechSolver final : public GippSolver {
 public:
  std::string name() const override { return "pure-dp-exp-mech"; }
  std::size_t solve(const GippInstance& inst, double eps,
                    RandomStream& rng) const override;
};

long long shifted_inverse_lambda(double eps, double beta, std::size_t k);

struct ShiftedInverseResult {
  double value = 0.0;
  long long lambda = 0;
  std::string solver;
  bool delta_fallback = false;  // delta > 0 requested without an approx solver
};

// Shifted-inverse release for a promised-monotone black box with finite
// declared range. Not a privacy wrapper: the guarantee needs the promise.
ShiftedInverseResult shifted_inverse(BlackBox& f, double eps, double delta,
                                     double beta, RandomStream& rng,
                                     std::optional<long long> depth_override = {},
                                     const GippSolver* approx_solver = nullptr);

ShiftedInverseResult shifted_inverse_table(
    const LatticeTable& t, const std::vector<double>& ys, double eps,
    double delta, double beta, RandomStream& rng,
    std::optional<long long> depth_override = {},
    const GippSolver* approx_solver = nullptr);

}  // namespace privwrap

#endif  // PRIVWRAP_SHIFTED_INVERSE_HPP_
