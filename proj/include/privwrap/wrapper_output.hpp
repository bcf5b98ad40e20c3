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

#ifndef PRIVWRAP_WRAPPER_OUTPUT_HPP_
#define PRIVWRAP_WRAPPER_OUTPUT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace privwrap {

inline constexpr const char* kProfilePaper = "paper-faithful";
// Reduced-constants mode for tractable lattices. Voids the privacy proofs;
// watermarked in every output that used it.
inline constexpr const char* kProfileTest = "test-constants";

// Result of one wrapper evaluation: the released value or nonresponse,
// released intermediates, and instrumentation read off the black box.
struct WrapperOutput {
  std::optional<double> result;  // nullopt encodes the nonresponse "bottom"
  std::vector<std::pair<std::string, double>> released;
  std::uint64_t queries = 0;
  int realized_depth = 0;
  std::string profile = kProfilePaper;
  // Non-released diagnostics (depths, noise scales, solver names as codes).
  std::vector<std::pair<std::string, double>> info;

  bool is_bottom() const { return !result.has_value(); }
  void release(const std::string& k, double v) { released.emplace_back(k, v); }
  void note(const std::string& k, double v) { info.emplace_back(k, v); }
};

}  // namespace privwrap

#endif  // PRIVWRAP_WRAPPER_OUTPUT_HPP_
