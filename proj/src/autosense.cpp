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

#include "privwrap/autosense.hpp"

#include "privwrap/noise.hpp"

#include <algorithm>
#include <cmath>

namespace privwrap {

long long autosense_lambda(double eps, double beta, std::size_t range_size) {
  const long long two_shi =
      2 * shifted_inverse_lambda(eps / 2.0, beta / 2.0, range_size);
  long long floor_bound =
      static_cast<long long>(std::ceil((8.0 / eps) * std::log(2.0 / beta)));
  if (floor_bound % 2 != 0) ++floor_bound;  // shifted-inverse depth is lambda/2
  return std::max(two_shi, floor_bound);
}

WrapperOutput autosense_wrap(BlackBox& f, const AutosenseParams& p,
                             RandomStream& rng) {
  if (f.range().kind() != RangeSpec::Kind::kFiniteList) {
    throw ParamError("autosense requires a finite declared range");
  }
  if (!(p.eps > 0.0) || !(p.beta > 0.0) || p.beta >= 1.0) {
    throw ParamError("autosense: need eps > 0 and beta in (0,1)");
  }
  const std::vector<double>& ys = f.range().values();
  const long long n = f.root_size();

  long long lambda;
  if (p.test_constants) {
    lambda = std::max<long long>(2, p.test_lambda);
    if (lambda % 2 != 0) ++lambda;
  } else {
    lambda = autosense_lambda(p.eps, p.beta, ys.size());
  }

  const double z = sample_laplace(2.0 / p.eps, rng);
  const long long ell = static_cast<long long>(
      std::floor(static_cast<double>(n) - 0.75 * static_cast<double>(lambda) + z));

  // Locality guard at the realized floor; every base query stays at or above
  // level ell. (For ell > n the monotonization is identically the range
  // infimum and makes no base queries at all.)
  if (ell <= n) {
    f.set_locality_guard(static_cast<int>(n - std::max<long long>(ell, 0)));
  }
  LatticeTable table = monotonize(f, ell);

  ShiftedInverseResult shi =
      shifted_inverse_table(table, ys, p.eps / 2.0, p.delta, p.beta / 2.0, rng,
                            lambda / 2, p.approx_solver);

  WrapperOutput out;
  out.result = shi.value;
  out.release("ell", static_cast<double>(ell));
  out.queries = f.ledger().distinct;
  out.realized_depth = f.ledger().realized_depth;
  out.profile = p.test_constants ? kProfileTest : kProfilePaper;
  out.note("lambda", static_cast<double>(lambda));
  out.note("shi_depth", static_cast<double>(lambda / 2));
  out.note("delta_fallback", shi.delta_fallback ? 1.0 : 0.0);
  f.clear_locality_guard();
  return out;
}

}  // namespace privwrap
