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

#include "privwrap/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace privwrap {

namespace {

// Calls visit(removed) for every removal combination of size exactly k.
void for_each_removal(int n, int k, std::vector<std::uint32_t>& removed,
                      std::uint32_t next,
                      const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (static_cast<int>(removed.size()) == k) {
    visit(removed);
    return;
  }
  for (std::uint32_t i = next;
       i + (k - removed.size()) <= static_cast<std::uint32_t>(n); ++i) {
    removed.push_back(i);
    for_each_removal(n, k, removed, i + 1, visit);
    removed.pop_back();
  }
}

}  // namespace

double brute_down_sensitivity(BlackBox& f, long long lambda) {
  const int n = f.root_size();
  const double fx = f.eval_removed(nullptr, 0);
  double worst = 0.0;
  std::vector<std::uint32_t> removed;
  for (int k = 1; k <= std::min<long long>(lambda, n); ++k) {
    for_each_removal(n, k, removed, 0, [&](const std::vector<std::uint32_t>& r) {
      worst = std::max(worst, std::abs(fx - f.eval_removed(r)));
    });
  }
  return worst;
}

bool brute_lipschitz_on_dn(BlackBox& f, long long lambda, double c) {
  const int n = f.root_size();
  bool ok = true;
  std::vector<std::uint32_t> removed;
  // Edges are (parent, parent minus one element); the parent removal set has
  // size d <= lambda - 1 and the extra removed index ranges over kept ones.
  for (int d = 0; d <= std::min<long long>(lambda - 1, n - 1) && ok; ++d) {
    for_each_removal(n, d, removed, 0, [&](const std::vector<std::uint32_t>& r) {
      if (!ok) return;
      const double fu = f.eval_removed(r);
      std::vector<std::uint32_t> child(r.size() + 1);
      for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(n); ++i) {
        if (std::binary_search(r.begin(), r.end(), i)) continue;
        auto it = child.begin();
        for (std::uint32_t x : r) {
          if (x < i) *it++ = x;
        }
        *it++ = i;
        for (std::uint32_t x : r) {
          if (x > i) *it++ = x;
        }
        if (std::abs(fu - f.eval_removed(child)) > c) {
          ok = false;
          return;
        }
      }
    });
  }
  return ok;
}

}  // namespace privwrap
