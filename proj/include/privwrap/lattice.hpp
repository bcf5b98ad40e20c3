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

#ifndef PRIVWRAP_LATTICE_HPP_
#define PRIVWRAP_LATTICE_HPP_

#include "privwrap/common.hpp"

#include <cstdint>
#include <vector>

namespace privwrap {

// Subsets of a fixed root dataset are identified by *removal keys*:
//  - roots with at most 64 elements use a bitmask of removed element indices;
//  - larger roots (removal depth at most 4) pack the sorted removed indices
//    into four 16-bit slots, smallest index in the highest slot, unused slots
//    0xFFFF. Both encodings compare in enumeration order within a level.
inline constexpr int kMaxWideRemovals = 4;

std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

// Level-ordered view of a down neighborhood: level j holds every subset of
// the root missing exactly j elements, keys sorted ascending. Level node
// counts are C(root_size, j); total node count is the sum over levels.
class LatticeView {
 public:
  // Enumerates levels 0..depth. Throws BudgetExceededError if the node count
  // would exceed max_nodes, or if a root with more than 64 elements is asked
  // for depth > 4 (engine limit; such lattices exceed desk scale regardless).
  LatticeView(int root_size, int depth, std::uint64_t max_nodes);

  int root_size() const { return root_size_; }
  int depth() const { return depth_; }
  bool wide() const { return wide_; }
  std::uint64_t node_count() const { return node_count_; }
  int kept_size(int level) const { return root_size_ - level; }

  const std::vector<std::uint64_t>& level(int j) const { return levels_[j]; }
  std::size_t level_size(int j) const { return levels_[j].size(); }

  // Index of key within level j (binary search); -1 if absent.
  std::ptrdiff_t find(int level, std::uint64_t key) const;

  // Removed root indices of a node, ascending; writes exactly `level` values.
  void removal_indices(std::uint64_t key, int level, std::uint32_t* out) const;

  // Key of the parent obtained by restoring the slot-th removed index
  // (slot in [0, level)).
  std::uint64_t parent_key(std::uint64_t key, int level, int slot) const;

  // Key with one more removed index (index must not already be removed).
  std::uint64_t child_key(std::uint64_t key, int level, std::uint32_t index) const;

  // Packs a sorted removal-index list into a key (count <= level capacity).
  static std::uint64_t pack(const std::uint32_t* removed, int count,
                            int root_size);

 private:
  int root_size_;
  int depth_;
  bool wide_;
  std::uint64_t node_count_;
  std::vector<std::vector<std::uint64_t>> levels_;
};

// Node count of DN_depth for a root of the given size, capped.
std::uint64_t down_neighborhood_size(int root_size, int depth,
                                     std::uint64_t cap);

}  // namespace privwrap

#endif  // PRIVWRAP_LATTICE_HPP_
