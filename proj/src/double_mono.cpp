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

#include "privwrap/double_mono.hpp"

#include "privwrap/exp_mech.hpp"
#include "privwrap/monotonize.hpp"
#include "privwrap/noise.hpp"

#include <algorithm>
#include <cmath>

namespace privwrap {

long long median_change_score(double a, const std::vector<double>& sorted_y) {
  const long long m = static_cast<long long>(sorted_y.size());
  const long long need = (m + 1) / 2;  // ceil(m/2)
  const long long le =
      std::upper_bound(sorted_y.begin(), sorted_y.end(), a) - sorted_y.begin();
  const long long ge =
      sorted_y.end() -
      std::lower_bound(sorted_y.begin(), sorted_y.end(), a);
  return std::max<long long>({0, need - le, need - ge});
}

double median_exp_mech(const std::vector<double>& y, double eps0, double lo,
                       double hi, RandomStream& rng) {
  if (y.empty()) throw ParamError("median_exp_mech: empty list");
  if (!(hi > lo)) throw ParamError("median_exp_mech: empty interval");
  std::vector<double> sorted = y;
  std::sort(sorted.begin(), sorted.end());

  PiecewiseScore ps;
  ps.breakpoints.push_back(lo);
  for (double v : sorted) {
    if (v > lo && v < hi && v > ps.breakpoints.back()) {
      ps.breakpoints.push_back(v);
    }
  }
  ps.breakpoints.push_back(hi);
  ps.scores.reserve(ps.breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < ps.breakpoints.size(); ++i) {
    const double mid = 0.5 * (ps.breakpoints[i] + ps.breakpoints[i + 1]);
    ps.scores.push_back(
        -static_cast<double>(median_change_score(mid, sorted)));
  }
  // Utility = -changes; exp_mech_interval weighs by exp(eps0 * u / 2).
  return exp_mech_interval(ps, eps0, 1.0, rng);
}

WrapperOutput double_mono_wrap(BlackBox& f, const DoubleMonoParams& p,
                               RandomStream& rng) {
  if (!(p.eps > 0.0) || !(p.beta > 0.0) || p.beta >= 1.0) {
    throw ParamError("double mono: need eps > 0 and beta in (0,1)");
  }
  if (f.range().kind() != RangeSpec::Kind::kInterval ||
      f.range().lo() != 0.0 || f.range().hi() != p.r) {
    throw ParamError("double mono: declared range must be [0, r]");
  }
  const double tau_real = (16.0 / p.eps) * std::log(4.0 * p.r / p.beta);
  if (p.r < tau_real) {
    throw ParamError("double mono: requires r >= (16/eps) ln(4r/beta)");
  }
  const long long tau = static_cast<long long>(std::ceil(tau_real));
  const long long n = f.root_size();

  const double w = static_cast<double>(n) + sample_laplace(2.0 / p.eps, rng);
  const long long ell = static_cast<long long>(std::floor(
      w - static_cast<double>(tau) - (2.0 / p.eps) * std::log(2.0 / p.beta)));

  if (ell <= n) {
    f.set_locality_guard(static_cast<int>(n - std::max<long long>(ell, 0)));
  }
  const LatticeTable g = double_monotonize(f, ell);
  const std::vector<double> y = offset_values(g, tau);

  const double a = median_exp_mech(y, p.eps / 2.0, -1.5 * static_cast<double>(tau),
                                   0.5 * (p.r + 5.0 * static_cast<double>(tau)),
                                   rng);

  WrapperOutput out;
  out.release("w", w);
  out.release("ell", static_cast<double>(ell));  // postprocessing of w
  out.note("tau", static_cast<double>(tau));
  out.result = 2.0 * a + static_cast<double>(tau) + static_cast<double>(ell) - w;
  out.queries = f.ledger().distinct;
  out.realized_depth = f.ledger().realized_depth;
  f.clear_locality_guard();
  return out;
}

}  // namespace privwrap
