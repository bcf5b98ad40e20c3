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

#ifndef PRIVWRAP_BLACKBOX_HPP_
#define PRIVWRAP_BLACKBOX_HPP_

#include "privwrap/common.hpp"
#include "privwrap/dataset.hpp"
#include "privwrap/lattice.hpp"
#include "privwrap/range.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace privwrap {

// A query names the kept subset of a fixed root by its removed indices
// (sorted ascending). Evaluators read the root plus the removal list, so
// built-in statistics stay O(|removed|) even for large roots.
struct SubsetQuery {
  const Dataset* root;
  const std::uint32_t* removed;
  int removed_count;

  int kept_size() const {
    return static_cast<int>(root->size()) - removed_count;
  }
  bool is_removed(std::uint32_t root_index) const;
  std::vector<ElementId> kept_elements() const;
  // Wire format: space-separated sorted kept identifiers, no newline.
  std::string kept_line() const;
};

using Evaluator = std::function<double(const SubsetQuery&)>;

struct QueryLedger {
  std::uint64_t distinct = 0;  // distinct subsets evaluated
  int realized_depth = 0;      // max |root \ z| over evaluated z
};

// Instrumented query interface every mechanism consumes: memoizes per
// subset (the ledger counts distinct subsets only), clamps every answer into
// the declared range, and enforces an optional locality guard.
class BlackBox {
 public:
  BlackBox(Dataset root, Evaluator evaluator, RangeSpec range,
           BudgetConfig budget = {});

  const Dataset& root() const { return root_; }
  int root_size() const { return static_cast<int>(root_.size()); }
  const RangeSpec& range() const { return range_; }
  const BudgetConfig& budget() const { return budget_; }

  // Cached evaluation of the subset with the given removed indices.
  double eval_removed(const std::uint32_t* removed, int count);
  double eval_removed(const std::vector<std::uint32_t>& removed) {
    return eval_removed(removed.data(), static_cast<int>(removed.size()));
  }
  // Evaluation of a dataset that must be a subset of the root.
  double eval_subset(const Dataset& z);

  // Cached evaluation of one lattice node / one whole level.
  double eval_node(const LatticeView& view, int level, std::size_t index);
  std::vector<double> eval_level(const LatticeView& view, int level);

  // Budget-checked level-ordered view of DN_depth(root).
  LatticeView lattice(int depth) const;

  // Any evaluation deeper than max_depth raises LocalityViolationError.
  void set_locality_guard(int max_depth) { guard_depth_ = max_depth; }
  void clear_locality_guard() { guard_depth_.reset(); }

  const QueryLedger& ledger() const { return ledger_; }
  void reset_instrumentation();

 private:
  double eval_key(std::uint64_t key, const std::uint32_t* removed, int count);

  Dataset root_;
  Evaluator evaluator_;
  RangeSpec range_;
  BudgetConfig budget_;
  std::optional<int> guard_depth_;
  QueryLedger ledger_;
  std::unordered_map<std::uint64_t, double> cache_;
};

// Black box computing t(f(z), |z|) with one base query per query; shares the
// base box's cache, ledger, and budget.
BlackBox derived_box(BlackBox& base,
                     std::function<double(double, int)> transform,
                     RangeSpec range);

}  // namespace privwrap

#endif  // PRIVWRAP_BLACKBOX_HPP_
