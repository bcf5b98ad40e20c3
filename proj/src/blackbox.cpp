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

#include "privwrap/blackbox.hpp"

#include <algorithm>

namespace privwrap {

bool SubsetQuery::is_removed(std::uint32_t root_index) const {
  return std::binary_search(removed, removed + removed_count, root_index);
}

std::vector<ElementId> SubsetQuery::kept_elements() const {
  std::vector<ElementId> out;
  out.reserve(kept_size());
  int r = 0;
  for (std::uint32_t i = 0; i < root->size(); ++i) {
    if (r < removed_count && removed[r] == i) {
      ++r;
      continue;
    }
    out.push_back(root->at(i));
  }
  return out;
}

std::string SubsetQuery::kept_line() const {
  std::string line;
  int r = 0;
  bool first = true;
  for (std::uint32_t i = 0; i < root->size(); ++i) {
    if (r < removed_count && removed[r] == i) {
      ++r;
      continue;
    }
    if (!first) line.push_back(' ');
    line += root->at(i);
    first = false;
  }
  return line;
}

BlackBox::BlackBox(Dataset root, Evaluator evaluator, RangeSpec range,
                   BudgetConfig budget)
    : root_(std::move(root)),
      evaluator_(std::move(evaluator)),
      range_(std::move(range)),
      budget_(budget) {}

double BlackBox::eval_key(std::uint64_t key, const std::uint32_t* removed,
                          int count) {
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (guard_depth_ && count > *guard_depth_) {
    throw LocalityViolationError(
        "query at depth " + std::to_string(count) + " outside locality guard " +
        std::to_string(*guard_depth_));
  }
  if (ledger_.distinct >= budget_.max_distinct_queries) {
    throw BudgetExceededError("query budget of " +
                              std::to_string(budget_.max_distinct_queries) +
                              " distinct subsets exhausted");
  }
  SubsetQuery q{&root_, removed, count};
  const double v = range_.clamp(evaluator_(q));
  cache_.emplace(key, v);
  ++ledger_.distinct;
  ledger_.realized_depth = std::max(ledger_.realized_depth, count);
  return v;
}

double BlackBox::eval_removed(const std::uint32_t* removed, int count) {
  const std::uint64_t key = LatticeView::pack(removed, count, root_size());
  return eval_key(key, removed, count);
}

double BlackBox::eval_subset(const Dataset& z) {
  std::vector<std::uint32_t> removed;
  removed.reserve(root_.size() - z.size());
  for (std::uint32_t i = 0; i < root_.size(); ++i) {
    if (!z.contains(root_.at(i))) removed.push_back(i);
  }
  if (z.size() + removed.size() != root_.size()) {
    throw ParamError("eval_subset: dataset is not a subset of the root");
  }
  return eval_removed(removed);
}

double BlackBox::eval_node(const LatticeView& view, int level,
                           std::size_t index) {
  const std::uint64_t key = view.level(level)[index];
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::uint32_t removed[64];
  std::vector<std::uint32_t> big;
  const std::uint32_t* rp = removed;
  if (level > 64) {
    big.resize(level);
    view.removal_indices(key, level, big.data());
    rp = big.data();
  } else {
    view.removal_indices(key, level, removed);
  }
  return eval_key(key, rp, level);
}

std::vector<double> BlackBox::eval_level(const LatticeView& view, int level) {
  const auto& keys = view.level(level);
  cache_.reserve(cache_.size() + keys.size());
  std::vector<double> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = eval_node(view, level, i);
  }
  return out;
}

LatticeView BlackBox::lattice(int depth) const {
  return LatticeView(root_size(), depth, budget_.max_distinct_queries);
}

void BlackBox::reset_instrumentation() {
  cache_.clear();
  ledger_ = QueryLedger{};
}

BlackBox derived_box(BlackBox& base,
                     std::function<double(double, int)> transform,
                     RangeSpec range) {
  BlackBox* bp = &base;
  Evaluator ev = [bp, t = std::move(transform)](const SubsetQuery& q) {
    const double v = bp->eval_removed(q.removed, q.removed_count);
    return t(v, q.kept_size());
  };
  return BlackBox(base.root(), std::move(ev), std::move(range), base.budget());
}

}  // namespace privwrap
