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

#ifndef PRIVWRAP_ORACLES_HPP_
#define PRIVWRAP_ORACLES_HPP_

#include "privwrap/blackbox.hpp"

namespace privwrap {

// Ground-truth oracles by plain enumeration. Deliberately independent of the
// lattice engine the mechanisms use: recursion over removal combinations only.

// max over z in DN_lambda(root) of |f(root) - f(z)|.
double brute_down_sensitivity(BlackBox& f, long long lambda);

// True iff every covering edge with both endpoints in DN_lambda(root)
// changes f by at most c.
bool brute_lipschitz_on_dn(BlackBox& f, long long lambda, double c);

}  // namespace privwrap

#endif  // PRIVWRAP_ORACLES_HPP_
