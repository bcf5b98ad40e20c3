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

#ifndef PRIVWRAP_DATASET_HPP_
#define PRIVWRAP_DATASET_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace privwrap {

// Universe elements are opaque identifiers, totally ordered (lexicographic)
// so that enumeration order and tie-breaking are deterministic everywhere.
using ElementId = std::string;

// A finite set of universe elements, kept sorted and duplicate-free.
class Dataset {
 public:
  Dataset() = default;

  // Sorts the elements; throws ParamError on duplicates.
  static Dataset from_elements(std::vector<ElementId> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const ElementId& at(std::size_t i) const { return elems_[i]; }
  const std::vector<ElementId>& elements() const { return elems_; }

  bool contains(const ElementId& e) const;
  // Index of e in sorted order, or -1.
  std::ptrdiff_t index_of(const ElementId& e) const;

  bool is_subset_of(const Dataset& other) const;
  Dataset without(const ElementId& e) const;

  bool operator==(const Dataset& other) const { return elems_ == other.elems_; }

 private:
  std::vector<ElementId> elems_;
};

// Multiset adapter: each occurrence (v, i-th copy) of a multiset value
// becomes the distinct element "v#i" (copies numbered from 1). The inverse
// view strips the copy suffix and recovers the multiset.
Dataset multiset_to_dataset(std::vector<std::string> values);
std::vector<std::string> dataset_to_multiset(const Dataset& d);

}  // namespace privwrap

#endif  // PRIVWRAP_DATASET_HPP_
