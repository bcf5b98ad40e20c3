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

#include <CLI11.hpp>
#include <json.hpp>

#include "privwrap/audit.hpp"
#include "privwrap/autosense.hpp"
#include "privwrap/builtins.hpp"
#include "privwrap/double_mono.hpp"
#include "privwrap/oracles.hpp"
#include "privwrap/plugin.hpp"
#include "privwrap/report.hpp"
#include "privwrap/wrappers.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace privwrap;

constexpr int kExitParam = 2;
constexpr int kExitPlugin = 3;
constexpr int kExitBudget = 4;

Dataset load_dataset(const std::string& path, bool multiset) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open dataset file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::vector<std::string> items;
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    auto j = nlohmann::json::parse(text);
    for (const auto& v : j) {
      items.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
      }
      if (!line.empty()) items.push_back(line);
    }
  }
  if (multiset) return multiset_to_dataset(std::move(items));
  return Dataset::from_elements(std::move(items));
}

RangeSpec parse_range(const std::string& spec) {
  if (spec.empty() || spec == "unbounded") return RangeSpec::unbounded();
  if (spec.rfind("interval:", 0) == 0) {
    const std::string body = spec.substr(9);
    const std::size_t colon = body.find(':');
    if (colon == std::string::npos) {
      throw ParamError("range interval:LO:HI expected");
    }
    return RangeSpec::interval(std::stod(body.substr(0, colon)),
                               std::stod(body.substr(colon + 1)));
  }
  if (spec.rfind("grid:", 0) == 0) {
    const std::string body = spec.substr(5);
    std::istringstream in(body);
    std::string lo_s, hi_s, n_s;
    if (!std::getline(in, lo_s, ':') || !std::getline(in, hi_s, ':') ||
        !std::getline(in, n_s)) {
      throw ParamError("range grid:LO:HI:N expected");
    }
    const double lo = std::stod(lo_s), hi = std::stod(hi_s);
    const int n = std::stoi(n_s);
    if (n < 2 || !(hi > lo)) throw ParamError("range grid needs N >= 2, hi > lo");
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
      vals[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    return RangeSpec::finite_list(std::move(vals));
  }
  if (spec.rfind("list:", 0) == 0) {
    const std::string body = spec.substr(5);
    const std::size_t dots = body.find("..");
    std::vector<double> vals;
    if (dots != std::string::npos && body.find(',') == std::string::npos) {
      const long long lo = std::stoll(body.substr(0, dots));
      const long long hi = std::stoll(body.substr(dots + 2));
      for (long long v = lo; v <= hi; ++v) vals.push_back(static_cast<double>(v));
    } else {
      std::istringstream in(body);
      std::string tok;
      while (std::getline(in, tok, ',')) vals.push_back(std::stod(tok));
    }
    return RangeSpec::finite_list(std::move(vals));
  }
  throw ParamError("unknown range spec '" + spec + "'");
}

Evaluator make_evaluator(const std::string& spec, const Dataset& root,
                         double plugin_timeout) {
  if (spec.rfind("builtin:", 0) == 0) {
    return bind_builtin(spec.substr(8), root);
  }
  if (spec.rfind("plugin:", 0) == 0) {
    return bind_plugin(parse_plugin_spec(spec.substr(7), plugin_timeout));
  }
  throw ParamError("black box spec must start with builtin: or plugin:");
}

struct CommonOpts {
  std::string dataset_path;
  bool multiset = false;
  std::string blackbox = "builtin:count";
  std::string range = "unbounded";
  std::uint64_t seed = 1;
  std::uint64_t budget = BudgetConfig{}.max_distinct_queries;
  double plugin_timeout = 10.0;
};

struct MechOpts {
  std::string mechanism;
  double eps = 1.0;
  double delta = 0.05;
  double beta = 0.1;
  double c = 1.0;
  double r = 1.0;
  bool test_constants = false;
  long long test_lambda = 4;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--dataset", o.dataset_path, "dataset file (one id per line, or JSON array)")
      ->required();
  cmd->add_flag("--multiset", o.multiset, "treat the dataset file as a multiset");
  cmd->add_option("--blackbox", o.blackbox, "builtin:NAME or plugin:CMD");
  cmd->add_option("--range", o.range,
                  "declared range: list:.. | grid:LO:HI:N | interval:LO:HI | unbounded");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--budget", o.budget, "max distinct black-box queries");
  cmd->add_option("--plugin-timeout", o.plugin_timeout, "seconds per plugin query");
}

void add_mech(CLI::App* cmd, MechOpts& m) {
  cmd->add_option("--mechanism", m.mechanism,
                  "autosense | subset-extension | tahoe | small-diameter | "
                  "double-mono | lipschitz-filter")
      ->required();
  cmd->add_option("--epsilon", m.eps, "privacy parameter");
  cmd->add_option("--delta", m.delta, "privacy parameter");
  cmd->add_option("--beta", m.beta, "failure probability");
  cmd->add_option("--c", m.c, "claimed Lipschitz constant");
  cmd->add_option("--r", m.r, "range diameter for bounded-range mechanisms");
  cmd->add_flag("--unsafe-test-constants", m.test_constants,
                "reduced constants for tractable lattices; voids the privacy proofs");
  cmd->add_option("--test-lambda", m.test_lambda,
                  "locality in test-constants autosense (rounded up to even)");
}

RangeSpec mechanism_range(const MechOpts& m, const CommonOpts& o) {
  // Bounded-range mechanisms enforce [0, r]; if no explicit range was given,
  // derive it from --r.
  if ((m.mechanism == "small-diameter" || m.mechanism == "double-mono" ||
       m.mechanism == "lipschitz-filter") &&
      (o.range.empty() || o.range == "unbounded")) {
    return RangeSpec::interval(0.0, m.r);
  }
  return parse_range(o.range);
}

WrapperOutput run_mechanism(BlackBox& box, const MechOpts& m,
                            RandomStream& rng) {
  if (m.mechanism == "autosense") {
    AutosenseParams p;
    p.eps = m.eps;
    p.delta = 0.0;
    p.beta = m.beta;
    p.test_constants = m.test_constants;
    p.test_lambda = m.test_lambda;
    return autosense_wrap(box, p, rng);
  }
  if (m.mechanism == "subset-extension") {
    SubsetExtensionParams p{m.eps, m.delta, m.c, m.test_constants};
    return subset_extension(box, p, rng);
  }
  if (m.mechanism == "tahoe") {
    TahoeParams p{m.eps, m.delta, m.c, m.test_constants};
    return modified_tahoe(box, p, rng);
  }
  if (m.mechanism == "small-diameter") {
    SmallDiameterParams p{m.eps, m.r, m.c};
    return small_diameter(box, p, rng);
  }
  if (m.mechanism == "double-mono") {
    DoubleMonoParams p{m.eps, m.beta, m.r};
    return double_mono_wrap(box, p, rng);
  }
  if (m.mechanism == "lipschitz-filter") {
    LipschitzFilterResult r = lipschitz_filter(box, {m.r, m.c});
    WrapperOutput out;
    out.result = r.value;
    out.queries = r.queries;
    out.realized_depth = r.realized_depth;
    return out;
  }
  throw ParamError("unknown mechanism '" + m.mechanism + "'");
}

std::vector<std::pair<std::string, std::string>> param_echo(
    const MechOpts& m, const CommonOpts& o) {
  auto fmt = [](double v) {
    std::ostringstream s;
    s << v;
    return s.str();
  };
  return {{"epsilon", fmt(m.eps)},   {"delta", fmt(m.delta)},
          {"beta", fmt(m.beta)},     {"c", fmt(m.c)},
          {"r", fmt(m.r)},           {"range", o.range},
          {"blackbox", o.blackbox},  {"dataset", o.dataset_path},
          {"multiset", o.multiset ? "true" : "false"}};
}

int handle_failure(const std::string& mechanism, const CommonOpts& o,
                   const MechOpts& m, const BlackBox* box,
                   const std::string& kind, const std::string& what,
                   int code) {
  nlohmann::ordered_json j;
  j["mechanism"] = mechanism;
  nlohmann::ordered_json pj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : param_echo(m, o)) pj[k] = v;
  j["params"] = pj;
  j["result"] = "error";
  j["error"] = kind;
  j["message"] = what;
  if (box != nullptr) {
    j["queries"] = box->ledger().distinct;
    j["realized_depth"] = box->ledger().realized_depth;
  }
  j["seed"] = o.seed;
  std::cout << j.dump(2) << "\n";
  return code;
}

int cmd_wrap(const CommonOpts& o, const MechOpts& m, bool timing) {
  const Dataset data = load_dataset(o.dataset_path, o.multiset);
  const RangeSpec range = mechanism_range(m, o);
  Evaluator ev = make_evaluator(o.blackbox, data, o.plugin_timeout);
  BlackBox box(data, std::move(ev), range, BudgetConfig{o.budget});
  RandomStream rng(o.seed);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    WrapperOutput out = run_mechanism(box, m, rng);
    std::optional<double> wall;
    if (timing) {
      wall = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    }
    std::cout << make_run_report(m.mechanism, param_echo(m, o), out, o.seed,
                                 wall);
    return 0;
  } catch (const PluginError& e) {
    return handle_failure(m.mechanism, o, m, &box, "plugin", e.what(),
                          kExitPlugin);
  } catch (const BudgetExceededError& e) {
    return handle_failure(m.mechanism, o, m, &box, "budget", e.what(),
                          kExitBudget);
  }
}

int cmd_oracle(const CommonOpts& o, const std::string& kind, long long lambda,
               double c) {
  const Dataset data = load_dataset(o.dataset_path, o.multiset);
  Evaluator ev = make_evaluator(o.blackbox, data, o.plugin_timeout);
  BlackBox box(data, std::move(ev), parse_range(o.range),
               BudgetConfig{o.budget});
  try {
    double value = 0.0;
    if (kind == "down-sensitivity") {
      value = brute_down_sensitivity(box, lambda);
    } else if (kind == "lipschitz") {
      value = brute_lipschitz_on_dn(box, lambda, c) ? 1.0 : 0.0;
    } else {
      throw ParamError("oracle must be down-sensitivity or lipschitz");
    }
    std::cout << make_oracle_report(kind, value, box.ledger().distinct);
    return 0;
  } catch (const PluginError& e) {
    std::cerr << "plugin error: " << e.what() << "\n";
    return kExitPlugin;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }
}

int cmd_audit(const CommonOpts& o, const MechOpts& m, std::uint64_t trials,
              int bins, const std::string& drop) {
  const Dataset data = load_dataset(o.dataset_path, o.multiset);
  if (data.empty()) throw ParamError("audit needs a nonempty dataset");
  const ElementId dropped =
      drop.empty() ? data.at(data.size() - 1) : ElementId(drop);
  if (!data.contains(dropped)) {
    throw ParamError("neighbor-drop element not in the dataset");
  }
  const Dataset neighbor = data.without(dropped);
  const RangeSpec range = mechanism_range(m, o);
  Evaluator ev_a = make_evaluator(o.blackbox, data, o.plugin_timeout);
  Evaluator ev_b = make_evaluator(o.blackbox, neighbor, o.plugin_timeout);

  auto sampler = [&](const Dataset& d, const Evaluator& ev) {
    return [&, d, ev](RandomStream& rs) -> std::optional<double> {
      BlackBox box(d, ev, range, BudgetConfig{o.budget});
      return run_mechanism(box, m, rs).result;
    };
  };
  RandomStream rng(o.seed);
  const DpAuditReport rep = dp_audit(sampler(data, ev_a),
                                     sampler(neighbor, ev_b), trials, bins, rng);
  std::cout << make_audit_report(m.mechanism, rep, o.seed);
  return 0;
}

int cmd_bench(const CommonOpts& o, const MechOpts& m, std::uint64_t trials,
              int threads) {
  const Dataset data = load_dataset(o.dataset_path, o.multiset);
  const RangeSpec range = mechanism_range(m, o);
  Evaluator ev = make_evaluator(o.blackbox, data, o.plugin_timeout);

  std::vector<std::optional<double>> results(trials);
  std::vector<std::uint64_t> queries(trials);
  RandomStream master(o.seed);
  const auto t0 = std::chrono::steady_clock::now();
  auto work = [&](std::uint64_t from, std::uint64_t to) {
    for (std::uint64_t i = from; i < to; ++i) {
      BlackBox box(data, ev, range, BudgetConfig{o.budget});
      RandomStream rs = master.substream(i);
      WrapperOutput out = run_mechanism(box, m, rs);
      results[i] = out.result;
      queries[i] = out.queries;
    }
  };
  if (threads <= 1) {
    work(0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t from = t * chunk;
      const std::uint64_t to = std::min<std::uint64_t>(trials, from + chunk);
      if (from < to) pool.emplace_back(work, from, to);
    }
    for (auto& th : pool) th.join();
  }
  const double wall = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();

  double sum = 0.0, sum2 = 0.0;
  std::uint64_t n = 0, bottoms = 0, qsum = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    qsum += queries[i];
    if (!results[i]) {
      ++bottoms;
      continue;
    }
    sum += *results[i];
    sum2 += *results[i] * *results[i];
    ++n;
  }
  nlohmann::ordered_json j;
  j["mechanism"] = m.mechanism;
  j["trials"] = trials;
  j["threads"] = threads;
  j["bottoms"] = bottoms;
  j["mean"] = n ? sum / n : 0.0;
  j["stddev"] = n > 1 ? std::sqrt((sum2 - sum * sum / n) / (n - 1)) : 0.0;
  j["mean_queries"] = trials ? static_cast<double>(qsum) / trials : 0.0;
  j["wall_ms"] = wall;
  j["seed"] = o.seed;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"privwrap: differentially private evaluation of untrusted "
               "black-box functions on sensitive datasets"};
  app.require_subcommand(1);

  CommonOpts wrap_o, oracle_o, audit_o, bench_o;
  MechOpts wrap_m, audit_m, bench_m;
  bool timing = false;
  std::string oracle_kind;
  long long oracle_lambda = 1;
  double oracle_c = 1.0;
  std::uint64_t audit_trials = 20000, bench_trials = 100;
  int audit_bins = 20, bench_threads = 1;
  std::string audit_drop;

  CLI::App* wrap = app.add_subcommand("wrap", "run one wrapper evaluation");
  add_common(wrap, wrap_o);
  add_mech(wrap, wrap_m);
  wrap->add_flag("--timing", timing, "include wall time (breaks byte determinism)");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->add_option("kind", oracle_kind, "down-sensitivity | lipschitz")
      ->required();
  add_common(oracle, oracle_o);
  oracle->add_option("--lambda", oracle_lambda, "down-neighborhood depth");
  oracle->add_option("--c", oracle_c, "Lipschitz constant to check");

  CLI::App* audit = app.add_subcommand("audit", "empirical privacy estimate");
  add_common(audit, audit_o);
  add_mech(audit, audit_m);
  audit->add_option("--trials", audit_trials, "trials per dataset (>= 10^4)");
  audit->add_option("--bins", audit_bins, "histogram bins");
  audit->add_option("--neighbor-drop", audit_drop,
                    "element removed to form the neighbor (default: largest)");

  CLI::App* bench = app.add_subcommand("bench", "repeated evaluations");
  add_common(bench, bench_o);
  add_mech(bench, bench_m);
  bench->add_option("--trials", bench_trials, "number of evaluations");
  bench->add_option("--threads", bench_threads, "worker threads (disjoint seeds)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (wrap->parsed()) return cmd_wrap(wrap_o, wrap_m, timing);
    if (oracle->parsed()) {
      return cmd_oracle(oracle_o, oracle_kind, oracle_lambda, oracle_c);
    }
    if (audit->parsed()) {
      return cmd_audit(audit_o, audit_m, audit_trials, audit_bins, audit_drop);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_o, bench_m, bench_trials, bench_threads);
    }
  } catch (const ParamError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitParam;
  } catch (const PluginError& e) {
    std::cerr << "plugin error: " << e.what() << "\n";
    return kExitPlugin;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }
  return 0;
}
