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

#include "privwrap/report.hpp"

#include <json.hpp>

namespace privwrap {

using ordered_json = nlohmann::ordered_json;

std::string make_run_report(
    const std::string& mechanism,
    const std::vector<std::pair<std::string, std::string>>& params,
    const WrapperOutput& out, std::uint64_t seed,
    std::optional<double> wall_ms) {
  ordered_json j;
  j["mechanism"] = mechanism;
  ordered_json pj = ordered_json::object();
  for (const auto& [k, v] : params) pj[k] = v;
  j["params"] = pj;
  if (out.result) {
    j["result"] = *out.result;
  } else {
    j["result"] = "bottom";
  }
  ordered_json rel = ordered_json::object();
  for (const auto& [k, v] : out.released) rel[k] = v;
  j["released"] = rel;
  j["queries"] = out.queries;
  j["realized_depth"] = out.realized_depth;
  j["seed"] = seed;
  j["profile"] = out.profile;
  if (!out.info.empty()) {
    ordered_json info = ordered_json::object();
    for (const auto& [k, v] : out.info) info[k] = v;
    j["info"] = info;
  }
  if (wall_ms) j["wall_ms"] = *wall_ms;
  return j.dump(2) + "\n";
}

std::string make_audit_report(const std::string& mechanism,
                              const DpAuditReport& rep, std::uint64_t seed) {
  ordered_json j;
  j["mechanism"] = mechanism;
  j["eps_hat"] = rep.eps_hat;
  j["delta_slack"] = rep.delta_slack;
  j["trials"] = rep.trials;
  j["bins"] = rep.bins;
  j["confidence_z"] = rep.confidence_z;
  j["min_count"] = rep.min_count;
  j["bottoms_a"] = rep.bottoms_a;
  j["bottoms_b"] = rep.bottoms_b;
  j["seed"] = seed;
  j["note"] = "heuristic empirical estimate, not a certificate";
  return j.dump(2) + "\n";
}

std::string make_oracle_report(const std::string& oracle, double value,
                               std::uint64_t queries) {
  ordered_json j;
  j["oracle"] = oracle;
  j["value"] = value;
  j["queries"] = queries;
  return j.dump(2) + "\n";
}

}  // namespace privwrap
