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

#include "privwrap/range.hpp"

#include "privwrap/common.hpp"

#include <algorithm>
#include <cmath>

namespace privwrap {

RangeSpec RangeSpec::finite_list(std::vector<double> values) {
  if (values.empty()) throw ParamError("finite range must be nonempty");
  if (!std::is_sorted(values.begin(), values.end(),
                      [](double a, double b) { return a <= b; })) {
    // is_sorted with <= rejects equal neighbors: enforce strict order.
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw ParamError("finite range values must be finite");
  }
  RangeSpec r;
  r.kind_ = Kind::kFiniteList;
  r.lo_ = values.front();
  r.hi_ = values.back();
  r.values_ = std::move(values);
  return r;
}

RangeSpec RangeSpec::interval(double lo, double hi) {
  if (!(hi > lo)) throw ParamError("interval range needs hi > lo");
  RangeSpec r;
  r.kind_ = Kind::kInterval;
  r.lo_ = lo;
  r.hi_ = hi;
  return r;
}

RangeSpec RangeSpec::unbounded() { return RangeSpec{}; }

double RangeSpec::clamp(double v) const {
  switch (kind_) {
    case Kind::kUnbounded:
      return v;
    case Kind::kInterval:
      return std::min(std::max(v, lo_), hi_);
    case Kind::kFiniteList: {
      auto it = std::lower_bound(values_.begin(), values_.end(), v);
      if (it == values_.end()) return values_.back();
      if (it == values_.begin()) return values_.front();
      const double above = *it;
      const double below = *(it - 1);
      return (above - v < v - below) ? above : below;
    }
  }
  return v;
}

double RangeSpec::sentinel_low() const {
  return kind_ == Kind::kUnbounded ? -std::numeric_limits<double>::infinity()
                                   : lo_;
}

}  // namespace privwrap
