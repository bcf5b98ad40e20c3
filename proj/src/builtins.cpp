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

#include "privwrap/builtins.hpp"

#include "privwrap/hard_instance.hpp"
#include "privwrap/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

namespace privwrap {

namespace {

std::vector<double> parse_values(const Dataset& root) {
  std::vector<double> vals(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string& id = root.at(i);
    char* end = nullptr;
    vals[i] = std::strtod(id.c_str(), &end);
    if (end == id.c_str()) {
      throw ParamError("builtin expects numeric element ids, got '" + id + "'");
    }
  }
  return vals;
}

std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string item = s.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw ParamError("expected key=value in '" + item + "'");
    }
    kv[item.substr(0, eq)] = item.substr(eq + 1);
    pos = comma + 1;
  }
  return kv;
}

}  // namespace

Evaluator bind_builtin(const std::string& spec, const Dataset& root) {
  if (spec == "count") {
    return [](const SubsetQuery& q) {
      return static_cast<double>(q.kept_size());
    };
  }
  if (spec == "sum-clamped") {
    auto vals = std::make_shared<std::vector<double>>(parse_values(root));
    const double total = std::accumulate(vals->begin(), vals->end(), 0.0);
    return [vals, total](const SubsetQuery& q) {
      double s = total;
      for (int i = 0; i < q.removed_count; ++i) s -= (*vals)[q.removed[i]];
      return s;
    };
  }
  if (spec == "average-clamped") {
    auto vals = std::make_shared<std::vector<double>>(parse_values(root));
    const double total = std::accumulate(vals->begin(), vals->end(), 0.0);
    return [vals, total](const SubsetQuery& q) {
      const int kept = q.kept_size();
      if (kept == 0) return 0.0;
      double s = total;
      for (int i = 0; i < q.removed_count; ++i) s -= (*vals)[q.removed[i]];
      return s / static_cast<double>(kept);
    };
  }
  if (spec == "median") {
    auto vals = std::make_shared<std::vector<double>>(parse_values(root));
    // Root indices in value order; ties resolved by index.
    auto order = std::make_shared<std::vector<std::uint32_t>>(vals->size());
    std::iota(order->begin(), order->end(), 0u);
    std::stable_sort(order->begin(), order->end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return (*vals)[a] < (*vals)[b];
                     });
    return [vals, order](const SubsetQuery& q) {
      const int kept = q.kept_size();
      if (kept == 0) return 0.0;
      const int lo_rank = (kept - 1) / 2;
      const int hi_rank = kept / 2;
      double lo = 0.0, hi = 0.0;
      int rank = 0;
      for (std::uint32_t idx : *order) {
        if (q.is_removed(idx)) continue;
        if (rank == lo_rank) lo = (*vals)[idx];
        if (rank == hi_rank) {
          hi = (*vals)[idx];
          break;
        }
        ++rank;
      }
      return 0.5 * (lo + hi);
    };
  }
  if (spec.rfind("constant:", 0) == 0) {
    const double k = std::strtod(spec.c_str() + 9, nullptr);
    return [k](const SubsetQuery&) { return k; };
  }
  if (spec.rfind("hard-instance:", 0) == 0) {
    auto kv = parse_kv(spec.substr(14));
    auto need = [&](const char* key) -> const std::string& {
      auto it = kv.find(key);
      if (it == kv.end()) {
        throw ParamError(std::string("hard-instance: missing ") + key);
      }
      return it->second;
    };
    const int n = std::stoi(need("n"));
    const long long alpha = std::stoll(need("alpha"));
    const long long rho = std::stoll(need("rho"));
    const long long gamma = std::stoll(need("gamma"));
    const std::string kind = need("kind");
    if (kind != "planted" && kind != "null") {
      throw ParamError("hard-instance: kind must be planted or null");
    }
    const std::uint64_t iseed =
        kv.count("iseed") ? std::stoull(kv.at("iseed")) : 0;
    RandomStream irng(iseed);
    HardInstance inst =
        make_hard_instance(n, alpha, rho, gamma, kind == "planted", irng);
    return inst.evaluator();
  }
  throw ParamError("unknown builtin black box '" + spec + "'");
}

}  // namespace privwrap
