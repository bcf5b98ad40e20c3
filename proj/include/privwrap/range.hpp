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

#ifndef PRIVWRAP_RANGE_HPP_
#define PRIVWRAP_RANGE_HPP_

#include <limits>
#include <vector>

namespace privwrap {

// Analyst-declared output range of a black box. Declared ranges are enforced
// at the query boundary: answers outside the range are replaced with the
// closest in-range value, so a lying black box can never violate them.
class RangeSpec {
 public:
  enum class Kind { kFiniteList, kInterval, kUnbounded };

  // Strictly sorted, nonempty list of admissible values.
  static RangeSpec finite_list(std::vector<double> values);
  // Closed interval [lo, hi], hi > lo.
  static RangeSpec interval(double lo, double hi);
  static RangeSpec unbounded();

  Kind kind() const { return kind_; }
  const std::vector<double>& values() const { return values_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  // Closest admissible value (ties broken toward the smaller value).
  // Identity for unbounded ranges.
  double clamp(double v) const;

  // inf of the range; -infinity for unbounded ranges.
  double sentinel_low() const;
  bool bounded_below() const { return kind_ != Kind::kUnbounded; }

 private:
  Kind kind_ = Kind::kUnbounded;
  std::vector<double> values_;
  double lo_ = -std::numeric_limits<double>::infinity();
  double hi_ = std::numeric_limits<double>::infinity();
};

}  // namespace privwrap

#endif  // PRIVWRAP_RANGE_HPP_
