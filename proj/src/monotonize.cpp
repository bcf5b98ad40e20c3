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

#include "privwrap/monotonize.hpp"

#include <algorithm>
#include <limits>

namespace privwrap {

double LatticeTable::at_subset(const Dataset& root, const Dataset& z) const {
  const long long kept = static_cast<long long>(z.size());
  if (kept < floor_size) return below_floor;
  const int level = static_cast<int>(root.size() - z.size());
  if (level > view.depth()) {
    throw ParamError("subset below the materialized view");
  }
  std::vector<std::uint32_t> removed;
  removed.reserve(level);
  for (std::uint32_t i = 0; i < root.size(); ++i) {
    if (!z.contains(root.at(i))) removed.push_back(i);
  }
  const std::uint64_t key =
      LatticeView::pack(removed.data(), level, view.root_size());
  const std::ptrdiff_t idx = view.find(level, key);
  if (idx < 0) throw ParamError("subset not within the view");
  return values[level][static_cast<std::size_t>(idx)];
}

std::vector<std::vector<double>> max_over_downset(
    const LatticeView& view, std::vector<std::vector<double>> in) {
  for (int j = view.depth(); j >= 1; --j) {
    const auto& keys = view.level(j);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const double v = in[j][i];
      for (int slot = 0; slot < j; ++slot) {
        const std::uint64_t pk = view.parent_key(keys[i], j, slot);
        const std::ptrdiff_t pi = view.find(j - 1, pk);
        auto& pv = in[j - 1][static_cast<std::size_t>(pi)];
        if (v > pv) pv = v;
      }
    }
  }
  return in;
}

namespace {

LatticeTable monotonize_transformed(
    BlackBox& f, long long level, double sentinel,
    const std::function<double(double, int)>& transform) {
  const int n = f.root_size();
  LatticeTable t{LatticeView(n, 0, f.budget().max_distinct_queries),
                 {},
                 level,
                 sentinel};
  if (level > n) {
    // Every subset is below the floor; no queries at all.
    t.values = {{sentinel}};
    t.view = LatticeView(n, -1, f.budget().max_distinct_queries);
    return t;
  }
  const int depth = n - static_cast<int>(std::max<long long>(level, 0));
  t.view = f.lattice(depth);
  std::vector<std::vector<double>> vals(depth + 1);
  for (int j = 0; j <= depth; ++j) {
    vals[j] = f.eval_level(t.view, j);
    if (transform) {
      const int kept = t.view.kept_size(j);
      for (double& v : vals[j]) v = transform(v, kept);
    }
  }
  t.values = max_over_downset(t.view, std::move(vals));
  return t;
}

}  // namespace

LatticeTable monotonize(BlackBox& f, long long level) {
  return monotonize_transformed(f, level, f.range().sentinel_low(), nullptr);
}

LatticeTable double_monotonize(BlackBox& f, long long level) {
  if (!f.range().bounded_below() || f.range().sentinel_low() < 0.0) {
    throw ParamError("double monotonization requires a range within [0, inf)");
  }
  const double sentinel = -static_cast<double>(level) / 2.0;
  return monotonize_transformed(
      f, level, sentinel, [level](double fv, int kept) {
        return 0.5 * (fv + static_cast<double>(kept - level));
      });
}

double offset_value(const LatticeTable& g, long long j) {
  return offset_values(g, j).back();
}

std::vector<double> offset_values(const LatticeTable& g, long long jmax) {
  if (jmax < 0) throw ParamError("offset index must be nonnegative");
  const int n = g.view.root_size();
  const int depth = g.view.depth();
  // Per-level minima of g(z) - |z| over the materialized view.
  std::vector<double> lvl_min(std::max(depth + 1, 0),
                              std::numeric_limits<double>::infinity());
  for (int d = 0; d <= depth; ++d) {
    const double kept = static_cast<double>(g.view.kept_size(d));
    for (double v : g.values[d]) lvl_min[d] = std::min(lvl_min[d], v - kept);
  }
  std::vector<double> out;
  out.reserve(jmax + 1);
  double best = std::numeric_limits<double>::infinity();
  for (long long j = 0; j <= jmax; ++j) {
    const long long d_cap = std::min<long long>(j, n);
    if (j <= depth) best = std::min(best, lvl_min[static_cast<std::size_t>(j)]);
    double m = best;
    // Subsets below the floor all carry the default value; the smallest
    // admissible depth dominates among them.
    if (d_cap > depth) {
      const double d0 = static_cast<double>(depth + 1);
      m = std::min(m, g.below_floor - (static_cast<double>(n) - d0));
    }
    out.push_back(m + static_cast<double>(n) - static_cast<double>(j));
  }
  return out;
}

}  // namespace privwrap
