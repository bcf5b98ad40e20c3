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

#include "privwrap/shifted_inverse.hpp"

#include "privwrap/exp_mech.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace privwrap {

long long inverse_loss(BlackBox& f, long long cap, double y) {
  if (cap < 1) throw ParamError("inverse_loss: cap must be >= 1");
  const int n = f.root_size();
  const int max_level = static_cast<int>(std::min<long long>(cap - 1, n));
  const LatticeView view = f.lattice(max_level);
  for (int j = 0; j <= max_level; ++j) {
    for (std::size_t i = 0; i < view.level_size(j); ++i) {
      if (f.eval_node(view, j, i) <= y) return j;
    }
  }
  return cap;
}

long long inverse_loss_table(const LatticeTable& t, long long cap, double y) {
  if (cap < 1) throw ParamError("inverse_loss_table: cap must be >= 1");
  const int n = t.view.root_size();
  const long long max_level = std::min<long long>(cap - 1, n);
  for (long long j = 0; j <= std::min<long long>(max_level, t.view.depth()); ++j) {
    const auto& lv = t.values[static_cast<std::size_t>(j)];
    for (double v : lv) {
      if (v <= y) return j;
    }
  }
  // Everything below the materialized floor carries the default value.
  if (t.view.depth() < n && t.view.depth() + 1 <= max_level &&
      t.below_floor <= y) {
    return t.view.depth() + 1;
  }
  return cap;
}

namespace {

std::vector<double> gipp_scores(const GippInstance& inst) {
  std::vector<double> s(inst.g.size());
  double prev = 0.0;  // g(x, 0) = 0 by convention
  for (std::size_t j = 0; j < inst.g.size(); ++j) {
    s[j] = std::min(inst.g[j], 1.0 - prev);
    prev = inst.g[j];
  }
  return s;
}

GippInstance gipp_from_losses(const std::vector<long long>& losses,
                              long long lambda) {
  GippInstance inst;
  inst.sensitivity = 1.0 / static_cast<double>(lambda + 1);
  inst.g.reserve(losses.size());
  for (long long loss : losses) {
    inst.g.push_back(std::max(
        0.0, 1.0 - static_cast<double>(loss) / static_cast<double>(lambda + 1)));
  }
  return inst;
}

}  // namespace

GippInstance build_gipp(BlackBox& f, const std::vector<double>& ys,
                        long long lambda) {
  if (lambda < 1) throw ParamError("build_gipp: lambda must be >= 1");
  if (ys.empty()) throw ParamError("build_gipp: empty range");
  const int n = f.root_size();
  const int max_level = static_cast<int>(std::min<long long>(lambda, n));
  const LatticeView view = f.lattice(max_level);
  // One shared level-order sweep serves every threshold; stop as soon as the
  // smallest threshold is satisfied.
  std::vector<double> level_min;
  const double y_min = *std::min_element(ys.begin(), ys.end());
  double running = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= max_level && running > y_min; ++j) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < view.level_size(j); ++i) {
      m = std::min(m, f.eval_node(view, j, i));
    }
    level_min.push_back(m);
    running = std::min(running, m);
  }
  std::vector<long long> losses(ys.size(), lambda + 1);
  for (std::size_t t = 0; t < ys.size(); ++t) {
    for (std::size_t j = 0; j < level_min.size(); ++j) {
      if (level_min[j] <= ys[t]) {
        losses[t] = static_cast<long long>(j);
        break;
      }
    }
  }
  return gipp_from_losses(losses, lambda);
}

GippInstance build_gipp_table(const LatticeTable& t,
                              const std::vector<double>& ys, long long lambda) {
  if (lambda < 1) throw ParamError("build_gipp_table: lambda must be >= 1");
  std::vector<long long> losses(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    losses[i] = inverse_loss_table(t, lambda + 1, ys[i]);
  }
  return gipp_from_losses(losses, lambda);
}

std::size_t PureDpExpMechSolver::solve(const GippInstance& inst, double eps,
                                       RandomStream& rng) const {
  return exp_mech_finite(gipp_scores(inst), eps, inst.sensitivity, rng) + 1;
}

long long shifted_inverse_lambda(double eps, double beta, std::size_t k) {
  if (!(eps > 0.0) || !(beta > 0.0) || beta >= 1.0 || k == 0) {
    throw ParamError("shifted_inverse_lambda: need eps > 0, beta in (0,1), k >= 1");
  }
  const double raw = (4.0 / eps) * std::log(static_cast<double>(k) / beta);
  return static_cast<long long>(std::ceil(raw)) + 1;
}

ShiftedInverseResult shifted_inverse_table(
    const LatticeTable& t, const std::vector<double>& ys, double eps,
    double delta, double beta, RandomStream& rng,
    std::optional<long long> depth_override, const GippSolver* approx_solver) {
  if (ys.empty()) throw ParamError("shifted inverse needs a finite range");
  ShiftedInverseResult res;
  res.lambda =
      depth_override ? *depth_override : shifted_inverse_lambda(eps, beta, ys.size());
  if (res.lambda < 1) throw ParamError("shifted inverse: depth must be >= 1");
  const GippInstance inst = build_gipp_table(t, ys, res.lambda);
  const PureDpExpMechSolver pure;
  const GippSolver* solver = &pure;
  if (delta > 0.0) {
    if (approx_solver != nullptr) {
      solver = approx_solver;
    } else {
      res.delta_fallback = true;  // no approximate-DP solver plugged in
    }
  }
  res.solver = solver->name();
  const std::size_t j = solver->solve(inst, eps, rng);
  res.value = ys[j - 1];
  return res;
}

ShiftedInverseResult shifted_inverse(BlackBox& f, double eps, double delta,
                                     double beta, RandomStream& rng,
                                     std::optional<long long> depth_override,
                                     const GippSolver* approx_solver) {
  if (f.range().kind() != RangeSpec::Kind::kFiniteList) {
    throw ParamError("shifted inverse requires a finite declared range");
  }
  const std::vector<double>& ys = f.range().values();
  ShiftedInverseResult res;
  res.lambda =
      depth_override ? *depth_override : shifted_inverse_lambda(eps, beta, ys.size());
  if (res.lambda < 1) throw ParamError("shifted inverse: depth must be >= 1");
  const GippInstance inst = build_gipp(f, ys, res.lambda);
  const PureDpExpMechSolver pure;
  const GippSolver* solver = &pure;
  if (delta > 0.0 && approx_solver != nullptr) solver = approx_solver;
  if (delta > 0.0 && approx_solver == nullptr) res.delta_fallback = true;
  res.solver = solver->name();
  const std::size_t j = solver->solve(inst, eps, rng);
  res.value = ys[j - 1];
  return res;
}

}  // namespace privwrap
