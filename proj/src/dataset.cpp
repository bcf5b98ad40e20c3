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

#include "privwrap/dataset.hpp"

#include "privwrap/common.hpp"

#include <algorithm>
#include <map>

namespace privwrap {

Dataset Dataset::from_elements(std::vector<ElementId> elems) {
  std::sort(elems.begin(), elems.end());
  auto dup = std::adjacent_find(elems.begin(), elems.end());
  if (dup != elems.end()) {
    throw ParamError("duplicate element '" + *dup +
                     "' (multiset input? adapt it first)");
  }
  Dataset d;
  d.elems_ = std::move(elems);
  return d;
}

bool Dataset::contains(const ElementId& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::ptrdiff_t Dataset::index_of(const ElementId& e) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
  if (it == elems_.end() || *it != e) return -1;
  return it - elems_.begin();
}

bool Dataset::is_subset_of(const Dataset& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

Dataset Dataset::without(const ElementId& e) const {
  Dataset d = *this;
  auto it = std::lower_bound(d.elems_.begin(), d.elems_.end(), e);
  if (it != d.elems_.end() && *it == e) d.elems_.erase(it);
  return d;
}

Dataset multiset_to_dataset(std::vector<std::string> values) {
  std::sort(values.begin(), values.end());
  std::vector<ElementId> elems;
  elems.reserve(values.size());
  std::map<std::string, int> copies;
  for (const auto& v : values) {
    elems.push_back(v + "#" + std::to_string(++copies[v]));
  }
  return Dataset::from_elements(std::move(elems));
}

std::vector<std::string> dataset_to_multiset(const Dataset& d) {
  std::vector<std::string> values;
  values.reserve(d.size());
  for (const auto& e : d.elements()) {
    auto pos = e.rfind('#');
    values.push_back(pos == std::string::npos ? e : e.substr(0, pos));
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace privwrap
