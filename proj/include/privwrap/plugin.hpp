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

#ifndef PRIVWRAP_PLUGIN_HPP_
#define PRIVWRAP_PLUGIN_HPP_

#include "privwrap/blackbox.hpp"

#include <string>
#include <vector>

namespace privwrap {

// External black box spoken to over a line protocol: for each query the
// wrapper writes one line with the space-separated sorted element ids of the
// queried subset (empty line for the empty set); the plugin replies with one
// line holding a decimal real. The stream stays open across queries; EOF
// terminates the plugin. Malformed output, crashes, and replies slower than
// the per-query timeout all surface as PluginError, never a crash.
struct PluginSpec {
  std::vector<std::string> argv;  // command and arguments
  double timeout_sec = 10.0;      // per-query wall clock
};

PluginSpec parse_plugin_spec(const std::string& command_line,
                             double timeout_sec);

// Starts the subprocess lazily on the first query; the process is shared by
// all copies of the returned evaluator and reaped when the last one dies.
Evaluator bind_plugin(const PluginSpec& spec);

}  // namespace privwrap

#endif  // PRIVWRAP_PLUGIN_HPP_
