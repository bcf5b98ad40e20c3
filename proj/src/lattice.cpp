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

#include "privwrap/lattice.hpp"

#include <algorithm>
#include <string>

namespace privwrap {

namespace {
constexpr std::uint64_t kWideEmptySlot = 0xFFFFULL;
}  // namespace

std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is integral at each step.
    const std::uint64_t num = n - k + i;
    if (r > (cap / num) * i + i) {
      // Conservative overflow/cap guard: r*num/i >= cap.
      return cap;
    }
    r = r * num / i;
    if (r >= cap) return cap;
  }
  return r;
}

std::uint64_t down_neighborhood_size(int root_size, int depth,
                                     std::uint64_t cap) {
  std::uint64_t total = 0;
  for (int j = 0; j <= depth && j <= root_size; ++j) {
    total += binom_capped(root_size, j, cap);
    if (total >= cap) return cap;
  }
  return total;
}

LatticeView::LatticeView(int root_size, int depth, std::uint64_t max_nodes)
    : root_size_(root_size),
      depth_(std::min(depth, root_size)),
      wide_(root_size > 64) {
  if (depth_ < 0) depth_ = 0;
  if (wide_ && depth_ > kMaxWideRemovals) {
    throw BudgetExceededError(
        "roots with more than 64 elements support removal depth <= 4 "
        "(requested depth " + std::to_string(depth_) + ")");
  }
  node_count_ = down_neighborhood_size(root_size_, depth_, max_nodes + 1);
  if (node_count_ > max_nodes) {
    throw BudgetExceededError(
        "down neighborhood of size " + std::to_string(root_size_) +
        " at depth " + std::to_string(depth_) + " exceeds the query budget (" +
        std::to_string(max_nodes) + ")");
  }
  levels_.resize(depth_ + 1);
  for (int j = 0; j <= depth_; ++j) {
    const std::uint64_t cnt = binom_capped(root_size_, j, max_nodes + 1);
    auto& lv = levels_[j];
    lv.reserve(cnt);
    if (!wide_) {
      if (j == 0) {
        lv.push_back(0);
      } else {
        std::uint64_t v = (j == 64) ? ~0ULL : ((1ULL << j) - 1);
        for (std::uint64_t i = 0; i < cnt; ++i) {
          lv.push_back(v);
          // Gosper's hack: next subset of the same popcount.
          const std::uint64_t u = v & (~v + 1);
          const std::uint64_t w = v + u;
          v = w | (((v ^ w) >> 2) / u);
        }
      }
    } else {
      std::uint32_t idx[kMaxWideRemovals];
      for (int s = 0; s < j; ++s) idx[s] = static_cast<std::uint32_t>(s);
      for (std::uint64_t i = 0; i < cnt; ++i) {
        lv.push_back(pack(idx, j, root_size_));
        // next combination, odometer style
        int s = j - 1;
        while (s >= 0 &&
               idx[s] == static_cast<std::uint32_t>(root_size_ - j + s)) {
          --s;
        }
        if (s < 0) break;
        ++idx[s];
        for (int t = s + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
  }
}

std::uint64_t LatticeView::pack(const std::uint32_t* removed, int count,
                                int root_size) {
  if (root_size <= 64) {
    std::uint64_t key = 0;
    for (int i = 0; i < count; ++i) key |= 1ULL << removed[i];
    return key;
  }
  if (count > kMaxWideRemovals) {
    throw BudgetExceededError("removal depth > 4 unsupported for large roots");
  }
  std::uint64_t key = 0;
  for (int i = 0; i < count; ++i) key = (key << 16) | removed[i];
  for (int i = count; i < kMaxWideRemovals; ++i) {
    key = (key << 16) | kWideEmptySlot;
  }
  return key;
}

std::ptrdiff_t LatticeView::find(int level, std::uint64_t key) const {
  const auto& lv = levels_[level];
  auto it = std::lower_bound(lv.begin(), lv.end(), key);
  if (it == lv.end() || *it != key) return -1;
  return it - lv.begin();
}

void LatticeView::removal_indices(std::uint64_t key, int level,
                                  std::uint32_t* out) const {
  if (!wide_) {
    int i = 0;
    while (key != 0) {
      const int bit = __builtin_ctzll(key);
      out[i++] = static_cast<std::uint32_t>(bit);
      key &= key - 1;
    }
    (void)level;
  } else {
    for (int s = 0; s < level; ++s) {
      out[s] = static_cast<std::uint32_t>((key >> (16 * (3 - s))) & 0xFFFF);
    }
  }
}

std::uint64_t LatticeView::parent_key(std::uint64_t key, int level,
                                      int slot) const {
  if (!wide_) {
    std::uint64_t k = key;
    for (int s = 0; s < slot; ++s) k &= k - 1;
    const std::uint64_t lowbit = k & (~k + 1);
    return key ^ lowbit;
  }
  std::uint32_t idx[kMaxWideRemovals];
  removal_indices(key, level, idx);
  std::uint32_t kept[kMaxWideRemovals];
  int n = 0;
  for (int s = 0; s < level; ++s) {
    if (s != slot) kept[n++] = idx[s];
  }
  return pack(kept, n, root_size_);
}

std::uint64_t LatticeView::child_key(std::uint64_t key, int level,
                                     std::uint32_t index) const {
  if (!wide_) return key | (1ULL << index);
  std::uint32_t idx[kMaxWideRemovals + 1];
  removal_indices(key, level, idx);
  int pos = level;
  while (pos > 0 && idx[pos - 1] > index) {
    idx[pos] = idx[pos - 1];
    --pos;
  }
  idx[pos] = index;
  return pack(idx, level + 1, root_size_);
}

}  // namespace privwrap
