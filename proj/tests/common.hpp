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
//
// Shared test scaffolding: small function tables over bitmask subsets of a
// tiny universe, naive reference implementations written straight from the
// definitions (no code shared with the engine), and statistical helpers.

#ifndef PRIVWRAP_TESTS_COMMON_HPP_
#define PRIVWRAP_TESTS_COMMON_HPP_

#include "privwrap/blackbox.hpp"
#include "privwrap/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

namespace tt {

using privwrap::BlackBox;
using privwrap::Dataset;
using privwrap::ElementId;
using privwrap::RandomStream;
using privwrap::RangeSpec;
using privwrap::SubsetQuery;

inline int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

// A function on all subsets of [n], indexed by bitmask.
struct TableFn {
  int n = 0;
  std::vector<double> v;
  double operator()(std::uint64_t mask) const { return v[mask]; }
};

inline TableFn random_table(int n, RandomStream& rng, double lo, double hi) {
  TableFn f{n, std::vector<double>(1ULL << n)};
  for (auto& x : f.v) x = lo + (hi - lo) * rng.next_unit_open();
  return f;
}

// Random values snapped to a grid (handy for exact comparisons).
inline TableFn random_grid_table(int n, RandomStream& rng, double lo,
                                 double hi, double step) {
  TableFn f = random_table(n, rng, lo, hi);
  for (auto& x : f.v) x = lo + step * std::round((x - lo) / step);
  return f;
}

// Monotone: the running max of a random table over the subset order.
inline TableFn random_monotone(int n, RandomStream& rng, double lo, double hi) {
  TableFn f = random_table(n, rng, lo, hi);
  for (std::uint64_t m = 0; m < f.v.size(); ++m) {
    for (int i = 0; i < n; ++i) {
      if (m & (1ULL << i)) f.v[m] = std::max(f.v[m], f.v[m ^ (1ULL << i)]);
    }
  }
  return f;
}

// Lipschitz: sum of per-element weights in [-1, 1] (monotone if lo_w >= 0).
inline TableFn random_weight_sum(int n, RandomStream& rng, double lo_w,
                                 double hi_w) {
  std::vector<double> w(n);
  for (auto& x : w) x = lo_w + (hi_w - lo_w) * rng.next_unit_open();
  TableFn f{n, std::vector<double>(1ULL << n)};
  for (std::uint64_t m = 0; m < f.v.size(); ++m) {
    double s = 0;
    for (int i = 0; i < n; ++i) {
      if (m & (1ULL << i)) s += w[i];
    }
    f.v[m] = s;
  }
  return f;
}

inline Dataset universe_dataset(int n) {
  std::vector<ElementId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::string("e") + char('0' + i));
  return Dataset::from_elements(std::move(ids));
}

inline Dataset mask_dataset(int n, std::uint64_t mask) {
  std::vector<ElementId> ids;
  for (int i = 0; i < n; ++i) {
    if (mask & (1ULL << i)) ids.push_back(std::string("e") + char('0' + i));
  }
  return Dataset::from_elements(std::move(ids));
}

// Black box rooted at a subset (given by mask) of the tiny universe,
// evaluating the table on global masks.
inline BlackBox table_box(const TableFn& f, std::uint64_t root_mask,
                          RangeSpec range = RangeSpec::unbounded(),
                          privwrap::BudgetConfig budget = {}) {
  Dataset root = mask_dataset(f.n, root_mask);
  std::vector<std::uint64_t> bit_of;  // root index -> universe bit
  for (std::uint32_t i = 0; i < root.size(); ++i) {
    bit_of.push_back(1ULL << (root.at(i)[1] - '0'));
  }
  auto values = std::make_shared<std::vector<double>>(f.v);
  auto bits = std::make_shared<std::vector<std::uint64_t>>(std::move(bit_of));
  const std::uint64_t full = root_mask;
  privwrap::Evaluator ev = [values, bits, full](const SubsetQuery& q) {
    std::uint64_t m = full;
    for (int i = 0; i < q.removed_count; ++i) m ^= (*bits)[q.removed[i]];
    return (*values)[m];
  };
  return BlackBox(std::move(root), std::move(ev), std::move(range), budget);
}

inline BlackBox full_box(const TableFn& f,
                         RangeSpec range = RangeSpec::unbounded(),
                         privwrap::BudgetConfig budget = {}) {
  return table_box(f, (1ULL << f.n) - 1, std::move(range), budget);
}

// ---------------------------------------------------------------------------
// Naive reference implementations (independent of the lattice engine).

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

template <typename Fn>
void for_each_subset(std::uint64_t u, Fn&& fn) {
  std::uint64_t sub = u;
  for (;;) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & u;
  }
}

inline double naive_monotonize(const TableFn& f, long long ell,
                               std::uint64_t mask, double sentinel) {
  double best = sentinel;
  for_each_subset(mask, [&](std::uint64_t sub) {
    if (popcount(sub) >= ell) best = std::max(best, f(sub));
  });
  return best;
}

inline bool naive_stable(const TableFn& f, double c, double ell,
                         std::uint64_t u) {
  if (static_cast<double>(popcount(u)) < ell) return false;
  bool ok = true;
  for_each_subset(u, [&](std::uint64_t w) {
    if (static_cast<double>(popcount(w)) < ell) return;
    for (int i = 0; i < f.n; ++i) {
      const std::uint64_t bit = 1ULL << i;
      if ((u & bit) && !(w & bit)) {
        if (std::abs(f(w | bit) - f(w)) > c) ok = false;
      }
    }
  });
  return ok;
}

struct NaiveStab {
  bool empty = false;
  double value = kNegInf;
};

inline NaiveStab naive_stabilize(const TableFn& f, double c, double ell,
                                 double h, std::uint64_t u) {
  NaiveStab out;
  out.empty = true;
  for_each_subset(u, [&](std::uint64_t sub) {
    if (static_cast<double>(popcount(sub)) < h) return;
    if (!naive_stable(f, c, ell, sub)) return;
    out.empty = false;
    out.value = std::max(out.value, f(sub));
  });
  return out;
}

inline long long naive_max_stable(const TableFn& f, double c, double ell,
                                  std::uint64_t u) {
  long long m = -1;
  for_each_subset(u, [&](std::uint64_t sub) {
    if (naive_stable(f, c, ell, sub)) m = std::max<long long>(m, popcount(sub));
  });
  return m;
}

// Proxy average over sizes {m-tau..m} of stabilizations of the same table.
inline double naive_proxy_t(const TableFn& g, double ell, long long tau,
                            std::uint64_t u) {
  const long long m = naive_max_stable(g, 1.0, ell, u);
  double acc = 0;
  for (long long h = m - tau; h <= m; ++h) {
    acc += naive_stabilize(g, 1.0, ell, std::max<double>(h, ell), u).value;
  }
  return acc / static_cast<double>(tau + 1);
}

inline TableFn cond_mono_table(const TableFn& f) {
  TableFn g{f.n, std::vector<double>(f.v.size())};
  for (std::uint64_t m = 0; m < f.v.size(); ++m) {
    g.v[m] = 0.5 * (f.v[m] + popcount(m));
  }
  return g;
}

inline TableFn cond_mono_level_table(const TableFn& f, long long ell,
                                     std::optional<double> floor_at) {
  TableFn g{f.n, std::vector<double>(f.v.size())};
  for (std::uint64_t m = 0; m < f.v.size(); ++m) {
    double t = 0.5 * (f.v[m] + popcount(m) - static_cast<double>(ell));
    if (floor_at) t = std::max(t, *floor_at);
    g.v[m] = t;
  }
  return g;
}

// Nested average per the bounded-range proxy definition (unit-rescaled f,
// range infimum lo).
inline double naive_proxy_p(const TableFn& unit_f, long long tau,
                            std::uint64_t u, double lo) {
  const int sz = popcount(u);
  double outer = 0;
  for (long long ell = sz - 2 * tau; ell <= sz - tau; ++ell) {
    const TableFn t = cond_mono_level_table(unit_f, ell, lo);
    double inner = 0;
    for (long long h = sz - tau; h <= sz; ++h) {
      const NaiveStab s =
          naive_stabilize(t, 1.0, static_cast<double>(ell), h, u);
      inner += s.empty ? lo : s.value;
    }
    outer += inner / static_cast<double>(tau + 1);
  }
  return outer / static_cast<double>(tau + 1);
}

inline double naive_double_mono(const TableFn& f, long long ell,
                                std::uint64_t mask) {
  const TableFn cm = cond_mono_level_table(f, ell, std::nullopt);
  return naive_monotonize(cm, ell, mask, -static_cast<double>(ell) / 2.0);
}

// Offset of a full-table function g at x over DN_j(x).
inline double naive_offset(const TableFn& g, long long j, std::uint64_t x) {
  const int sz = popcount(x);
  double best = std::numeric_limits<double>::infinity();
  for_each_subset(x, [&](std::uint64_t z) {
    if (popcount(z) < sz - j) return;
    best = std::min(best, g(z) - popcount(z) + sz - static_cast<double>(j));
  });
  return best;
}

inline long long naive_inverse_loss(const TableFn& f, std::uint64_t x, double y,
                                    long long cap) {
  long long best = cap;
  const int sz = popcount(x);
  for_each_subset(x, [&](std::uint64_t s) {
    if (f(s) <= y) best = std::min<long long>(best, sz - popcount(s));
  });
  return std::min(best, cap);
}

inline double naive_down_sensitivity(const TableFn& f, std::uint64_t x,
                                     long long lambda) {
  double worst = 0;
  for_each_subset(x, [&](std::uint64_t z) {
    if (popcount(x) - popcount(z) > lambda) return;
    worst = std::max(worst, std::abs(f(x) - f(z)));
  });
  return worst;
}

// ---------------------------------------------------------------------------
// Statistical helpers.

inline double mean_of(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double stddev_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

inline double laplace_cdf(double x, double mu, double b) {
  const double t = (x - mu) / b;
  return t < 0 ? 0.5 * std::exp(t) : 1.0 - 0.5 * std::exp(-t);
}

// Asymptotic two-sided Kolmogorov-Smirnov p-value against a continuous CDF.
inline double ks_p_value(std::vector<double> samples,
                         const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double c = cdf(samples[i]);
    d = std::max(d, std::abs(c - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - c));
  }
  const double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
  double p = 0;
  for (int k = 1; k <= 100; ++k) {
    p += 2.0 * (k % 2 == 1 ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
  }
  return std::min(std::max(p, 0.0), 1.0);
}

// Two-sided sign-test p-value (normal approximation).
inline double sign_test_p(std::uint64_t above, std::uint64_t below) {
  const double n = static_cast<double>(above + below);
  if (n == 0) return 1.0;
  const double z = std::abs(static_cast<double>(above) - n / 2) / std::sqrt(n / 4);
  return std::erfc(z / std::sqrt(2.0));
}

}  // namespace tt

#endif  // PRIVWRAP_TESTS_COMMON_HPP_
