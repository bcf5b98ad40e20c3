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

#include "privwrap/hard_instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace privwrap {

namespace {

long long hamming(const std::vector<std::uint8_t>& a,
                  const std::vector<std::uint8_t>& b) {
  long long d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace

ElementId hard_instance_element_id(int index, int n) {
  int width = 1;
  for (int v = n - 1; v >= 10; v /= 10) ++width;
  std::string s = std::to_string(index);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

double HardInstance::value_on_bits(const std::vector<std::uint8_t>& z) const {
  const long long dx = hamming(x_bits, z);
  if (!planted) {
    return static_cast<double>(std::max<long long>(k - dx, 0));
  }
  const long long dy = hamming(y_bits, z);
  if (dx == dy) {
    throw std::logic_error("planted instance: equidistant point (gamma even?)");
  }
  if (dx < dy) return static_cast<double>(std::max<long long>(k - dx, 0));
  return static_cast<double>(std::max<long long>(s - dy, 0));
}

Dataset HardInstance::center_dataset() const {
  std::vector<ElementId> elems;
  for (int i = 0; i < n; ++i) {
    if (x_bits[i]) elems.push_back(hard_instance_element_id(i, n));
  }
  return Dataset::from_elements(std::move(elems));
}

Evaluator HardInstance::evaluator() const {
  HardInstance inst = *this;
  return [inst](const SubsetQuery& q) {
    std::vector<std::uint8_t> z(inst.n, 0);
    for (std::uint32_t i = 0; i < q.root->size(); ++i) {
      if (q.is_removed(i)) continue;
      const int idx = std::stoi(q.root->at(i));
      if (idx < 0 || idx >= inst.n) {
        throw ParamError("hard instance: element id out of [0, n)");
      }
      z[idx] = 1;
    }
    return inst.value_on_bits(z);
  };
}

HardInstance make_hard_instance(int n, long long alpha, long long rho,
                                long long gamma, bool planted,
                                RandomStream& rng) {
  if (n <= 0 || alpha <= 0 || rho <= 0) {
    throw ParamError("hard instance: n, alpha, rho must be positive");
  }
  if (gamma % 2 == 0) throw ParamError("hard instance: gamma must be odd");
  if (gamma > std::min<long long>(rho, n)) {
    throw ParamError("hard instance: gamma must be <= min(rho, n)");
  }
  if (rho % (2 * alpha) != 0) {
    throw ParamError("hard instance: 2*alpha must divide rho");
  }
  if (rho < 4 * alpha) {
    throw ParamError("hard instance: rho >= 4*alpha required "
                     "(two distinct cone heights)");
  }
  HardInstance inst;
  inst.n = n;
  inst.planted = planted;
  inst.x_bits.resize(n);
  for (int i = 0; i < n; ++i) inst.x_bits[i] = rng.next_u64() & 1;
  // y: flip exactly gamma coordinates, chosen uniformly.
  inst.y_bits = inst.x_bits;
  std::vector<int> coords(n);
  for (int i = 0; i < n; ++i) coords[i] = i;
  for (long long t = 0; t < gamma; ++t) {
    const std::size_t j = t + rng.next_u64() % (coords.size() - t);
    std::swap(coords[t], coords[j]);
    inst.y_bits[coords[t]] ^= 1;
  }
  // k, s uniform without replacement from {2 alpha, 4 alpha, ..., rho}.
  std::vector<long long> heights;
  for (long long v = 2 * alpha; v <= rho; v += 2 * alpha) heights.push_back(v);
  const std::size_t ki = rng.next_u64() % heights.size();
  inst.k = heights[ki];
  heights.erase(heights.begin() + ki);
  inst.s = heights[rng.next_u64() % heights.size()];
  return inst;
}

}  // namespace privwrap
