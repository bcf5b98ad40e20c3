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

#ifndef PRIVWRAP_BUILTINS_HPP_
#define PRIVWRAP_BUILTINS_HPP_

#include "privwrap/blackbox.hpp"

#include <string>

namespace privwrap {

// Built-in black boxes, named by spec string:
//   count                      |z|
//   sum-clamped                sum of element values
//   average-clamped            mean of element values (0 on the empty set)
//   median                     median of element values (0 on the empty set)
//   constant:K                 K
//   hard-instance:n=..,alpha=..,rho=..,gamma=..,kind=planted|null,iseed=..
// Numeric builtins parse the leading decimal of each element id, so
// multiset-adapted ids like "10.5#2" keep their value.
Evaluator bind_builtin(const std::string& spec, const Dataset& root);

}  // namespace privwrap

#endif  // PRIVWRAP_BUILTINS_HPP_
