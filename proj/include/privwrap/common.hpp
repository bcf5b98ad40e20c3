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

#ifndef PRIVWRAP_COMMON_HPP_
#define PRIVWRAP_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace privwrap {

// Thrown when an enumeration would exceed the configured number of distinct
// black-box queries. Turns exponential worst cases into a clean error.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a query falls outside an installed locality guard. Mechanisms
// must never trip this; it signals an internal bug.
class LocalityViolationError : public std::logic_error {
 public:
  explicit LocalityViolationError(const std::string& what)
      : std::logic_error(what) {}
};

// External evaluator crashed, hung past its timeout, or emitted a non-number.
class PluginError : public std::runtime_error {
 public:
  explicit PluginError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameters or violated mechanism preconditions.
class ParamError : public std::invalid_argument {
 public:
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetConfig {
  // Maximum number of distinct subsets any single evaluation may query.
  std::uint64_t max_distinct_queries = 10'000'000;
};

}  // namespace privwrap

#endif  // PRIVWRAP_COMMON_HPP_
