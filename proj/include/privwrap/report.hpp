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

#ifndef PRIVWRAP_REPORT_HPP_
#define PRIVWRAP_REPORT_HPP_

#include "privwrap/audit.hpp"
#include "privwrap/wrapper_output.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace privwrap {

// Canonical run report: JSON with fixed key order so identical seed+inputs
// produce byte-identical bytes. Wall time is emitted only when requested,
// since it breaks reproducibility.
std::string make_run_report(
    const std::string& mechanism,
    const std::vector<std::pair<std::string, std::string>>& params,
    const WrapperOutput& out, std::uint64_t seed,
    std::optional<double> wall_ms);

std::string make_audit_report(const std::string& mechanism,
                              const DpAuditReport& rep, std::uint64_t seed);

std::string make_oracle_report(const std::string& oracle, double value,
                               std::uint64_t queries);

}  // namespace privwrap

#endif  // PRIVWRAP_REPORT_HPP_
