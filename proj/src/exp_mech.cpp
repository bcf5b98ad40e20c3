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

#include "privwrap/exp_mech.hpp"

#include "privwrap/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace privwrap {

std::size_t exp_mech_finite(const std::vector<double>& scores, double eps,
                            double sensitivity, RandomStream& rng) {
  if (scores.empty()) throw ParamError("exp_mech_finite: empty score vector");
  if (!(eps > 0.0) || !(sensitivity > 0.0)) {
    throw ParamError("exp_mech_finite: eps and sensitivity must be positive");
  }
  const double coef = eps / (2.0 * sensitivity);
  double max_lw = -std::numeric_limits<double>::infinity();
  for (double s : scores) max_lw = std::max(max_lw, coef * s);
  if (std::isinf(max_lw) && max_lw < 0.0) {
    throw ParamError("exp_mech_finite: all scores are -infinity");
  }
  std::vector<double> w(scores.size());
  double total = 0.0;
  for (std::size_t j = 0; j < scores.size(); ++j) {
    const double lw = coef * scores[j];
    w[j] = std::isinf(lw) && lw < 0.0 ? 0.0 : std::exp(lw - max_lw);
    total += w[j];
  }
  const double target = rng.next_unit_open() * total;
  double acc = 0.0;
  for (std::size_t j = 0; j < scores.size(); ++j) {
    acc += w[j];
    if (target < acc && w[j] > 0.0) return j;
  }
  // Rounding pushed the target past the last positive weight.
  for (std::size_t j = scores.size(); j-- > 0;) {
    if (w[j] > 0.0) return j;
  }
  return 0;  // unreachable
}

double exp_mech_interval(const PiecewiseScore& score, double eps,
                         double sensitivity, RandomStream& rng) {
  if (score.breakpoints.size() < 2 ||
      score.scores.size() + 1 != score.breakpoints.size()) {
    throw ParamError("exp_mech_interval: malformed piecewise score");
  }
  if (!(score.breakpoints.back() > score.breakpoints.front())) {
    throw ParamError("exp_mech_interval: zero-length interval");
  }
  if (!(eps > 0.0) || !(sensitivity > 0.0)) {
    throw ParamError("exp_mech_interval: eps and sensitivity must be positive");
  }
  const double coef = eps / (2.0 * sensitivity);
  const std::size_t n = score.scores.size();
  std::vector<double> lw(n);
  double max_lw = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double len = score.breakpoints[i + 1] - score.breakpoints[i];
    lw[i] = len > 0.0 ? std::log(len) + coef * score.scores[i]
                      : -std::numeric_limits<double>::infinity();
    max_lw = std::max(max_lw, lw[i]);
  }
  double total = 0.0;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::isinf(lw[i]) && lw[i] < 0.0 ? 0.0 : std::exp(lw[i] - max_lw);
    total += w[i];
  }
  const double target = rng.next_unit_open() * total;
  std::size_t piece = n - 1;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += w[i];
    if (target < acc && w[i] > 0.0) {
      piece = i;
      break;
    }
  }
  const double lo = score.breakpoints[piece];
  const double hi = score.breakpoints[piece + 1];
  return lo + (hi - lo) * rng.next_unit_open();
}

}  // namespace privwrap
