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

#include "privwrap/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace privwrap {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

StabilityContext build_stability(const LatticeView& view,
                                 std::vector<std::vector<double>> values,
                                 double lipschitz_c, double floor_level,
                                 std::optional<double> sentinel) {
  const int n = view.root_size();
  if (floor_level > static_cast<double>(n)) {
    throw ParamError("stability floor exceeds the dataset size: no stable subset");
  }
  const long long floor_kept = std::max<long long>(
      static_cast<long long>(std::ceil(floor_level)), 0);
  if (view.depth() < n - static_cast<int>(floor_kept)) {
    throw ParamError("lattice view does not reach the stability floor");
  }
  StabilityContext ctx;
  ctx.view = &view;
  ctx.values = std::move(values);
  ctx.lipschitz_c = lipschitz_c;
  ctx.floor_level = floor_level;
  ctx.sentinel = sentinel;

  const int depth = view.depth();
  // ok[u]: no counted violating edge inside u. An edge (w, u) counts when the
  // lower endpoint w has size >= floor_level.
  std::vector<std::vector<char>> ok(depth + 1);
  for (int j = 0; j <= depth; ++j) ok[j].assign(view.level_size(j), 1);
  for (int j = depth; j >= 1; --j) {
    const auto& keys = view.level(j);
    const bool edge_counts =
        static_cast<double>(view.kept_size(j)) >= floor_level;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const double v = ctx.values[j][i];
      const bool child_ok = ok[j][i] != 0;
      for (int slot = 0; slot < j; ++slot) {
        const std::uint64_t pk = view.parent_key(keys[i], j, slot);
        const std::size_t pi =
            static_cast<std::size_t>(view.find(j - 1, pk));
        if (!child_ok ||
            (edge_counts &&
             std::abs(ctx.values[j - 1][pi] - v) > lipschitz_c)) {
          ok[j - 1][pi] = 0;
        }
      }
    }
  }

  ctx.stable.resize(depth + 1);
  ctx.suffix_max.assign(depth + 1, kNegInf);
  ctx.max_stable = -1;
  double running = kNegInf;
  for (int j = 0; j <= depth; ++j) {
    const bool size_ok = static_cast<double>(view.kept_size(j)) >= floor_level;
    ctx.stable[j].assign(view.level_size(j), 0);
    double lvl = kNegInf;
    for (std::size_t i = 0; i < view.level_size(j); ++i) {
      if (size_ok && ok[j][i]) {
        ctx.stable[j][i] = 1;
        lvl = std::max(lvl, ctx.values[j][i]);
        if (ctx.max_stable < 0) ctx.max_stable = view.kept_size(j);
      }
    }
    running = std::max(running, lvl);
    ctx.suffix_max[j] = running;
  }
  if (ctx.max_stable < 0) {
    // Unreachable when floor <= root size: the floor level itself is
    // vacuously stable.
    throw ParamError("no stable subset found");
  }
  return ctx;
}

bool is_stable_node(const StabilityContext& ctx, int level, std::size_t idx) {
  return ctx.stable[level][idx] != 0;
}

bool is_stable_subset(const StabilityContext& ctx, const Dataset& root,
                      const Dataset& u) {
  const int level = static_cast<int>(root.size() - u.size());
  if (level > ctx.view->depth()) {
    throw ParamError("subset outside the precomputed view");
  }
  std::vector<std::uint32_t> removed;
  removed.reserve(level);
  for (std::uint32_t i = 0; i < root.size(); ++i) {
    if (!u.contains(root.at(i))) removed.push_back(i);
  }
  const std::uint64_t key =
      LatticeView::pack(removed.data(), level, ctx.view->root_size());
  const std::ptrdiff_t idx = ctx.view->find(level, key);
  if (idx < 0) throw ParamError("subset outside the precomputed view");
  return is_stable_node(ctx, level, static_cast<std::size_t>(idx));
}

StabilizationValue stabilize(const StabilityContext& ctx, double min_size) {
  const int n = ctx.view->root_size();
  const double eff = std::max(min_size, ctx.floor_level);
  long long kmin = static_cast<long long>(std::ceil(eff));
  kmin = std::max<long long>(kmin, 0);
  StabilizationValue out;
  if (kmin > ctx.max_stable) {
    out.empty = true;
    out.value = ctx.sentinel.value_or(kNegInf);
    return out;
  }
  const int j = n - static_cast<int>(kmin);
  out.value = ctx.suffix_max[j];
  return out;
}

long long max_stable_size(const StabilityContext& ctx) {
  return ctx.max_stable;
}

double proxy_t(const StabilityContext& ctx, long long tau) {
  if (tau < 1) throw ParamError("proxy_t: tau must be >= 1");
  const long long m = ctx.max_stable;
  double acc = 0.0;
  for (long long h = m - tau; h <= m; ++h) {
    const StabilizationValue s = stabilize(ctx, static_cast<double>(h));
    if (s.empty && !ctx.sentinel.has_value()) {
      throw std::logic_error(
          "stabilization sentinel (-inf) reached arithmetic in proxy_t");
    }
    acc += s.value;
  }
  return acc / static_cast<double>(tau + 1);
}

std::uint64_t lex_least_stable_key(const StabilityContext& ctx, int level) {
  const auto& keys = ctx.view->level(level);
  std::vector<std::uint32_t> best, cur;
  std::uint64_t best_key = 0;
  bool found = false;
  cur.resize(level);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!ctx.stable[level][i]) continue;
    ctx.view->removal_indices(keys[i], level, cur.data());
    if (!found) {
      best = cur;
      best_key = keys[i];
      found = true;
      continue;
    }
    // Kept sets are compared lexicographically: at the first removed index
    // present in exactly one of the two sets, the set still KEEPING that
    // element is the smaller one.
    int a = 0, b = 0;
    bool cur_wins = false, decided = false;
    while (a < level && b < level) {
      if (cur[a] == best[b]) {
        ++a;
        ++b;
      } else if (cur[a] < best[b]) {
        // cur removes an element that best keeps: best is lex-smaller.
        decided = true;
        break;
      } else {
        cur_wins = true;
        decided = true;
        break;
      }
    }
    if (!decided) cur_wins = false;  // identical removal sets cannot happen
    if (cur_wins) {
      best = cur;
      best_key = keys[i];
    }
  }
  if (!found) throw ParamError("no stable node at the requested level");
  return best_key;
}

BlackBox cond_monotonize(BlackBox& f) {
  return derived_box(
      f, [](double v, int size) { return 0.5 * (v + static_cast<double>(size)); },
      RangeSpec::unbounded());
}

BlackBox cond_monotonize_level(BlackBox& f, long long level, bool floored) {
  const double lo = f.range().sentinel_low();
  if (floored && !f.range().bounded_below()) {
    floored = false;  // floor at -inf reduces to the unfloored transform
  }
  return derived_box(
      f,
      [level, floored, lo](double v, int size) {
        const double t = 0.5 * (v + static_cast<double>(size - level));
        return floored ? std::max(t, lo) : t;
      },
      RangeSpec::unbounded());
}

double proxy_p(const LatticeView& view,
               const std::vector<std::vector<double>>& unit_values,
               long long tau, double range_lo) {
  if (tau < 1) throw ParamError("proxy_p: tau must be >= 1");
  const int n = view.root_size();
  const int depth = view.depth();
  double outer = 0.0;
  for (long long ell = n - 2 * tau; ell <= n - tau; ++ell) {
    std::vector<std::vector<double>> tv(depth + 1);
    for (int j = 0; j <= depth; ++j) {
      const double kept = view.kept_size(j);
      tv[j].resize(view.level_size(j));
      for (std::size_t i = 0; i < tv[j].size(); ++i) {
        tv[j][i] = std::max(
            0.5 * (unit_values[j][i] + kept - static_cast<double>(ell)),
            range_lo);
      }
    }
    StabilityContext ctx = build_stability(view, std::move(tv), 1.0,
                                           static_cast<double>(ell), range_lo);
    double inner = 0.0;
    for (long long h = n - tau; h <= n; ++h) {
      inner += stabilize(ctx, static_cast<double>(h)).value;
    }
    outer += inner / static_cast<double>(tau + 1);
  }
  return outer / static_cast<double>(tau + 1);
}

double proxy_p_box(BlackBox& f_unit, long long tau) {
  const int n = f_unit.root_size();
  const int depth = static_cast<int>(std::min<long long>(2 * tau, n));
  const LatticeView view = f_unit.lattice(depth);
  std::vector<std::vector<double>> vals(depth + 1);
  for (int j = 0; j <= depth; ++j) vals[j] = f_unit.eval_level(view, j);
  return proxy_p(view, vals, tau, f_unit.range().sentinel_low());
}

}  // namespace privwrap
