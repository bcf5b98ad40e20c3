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

#include <doctest.h>

#include "common.hpp"
#include "privwrap/builtins.hpp"
#include "privwrap/lattice.hpp"

using namespace privwrap;

TEST_SUITE_BEGIN("domain");

TEST_CASE("down neighborhood node counts") {
  // {a,b,c} at depth 0 is just the root.
  LatticeView v0(3, 0, 1000);
  CHECK(v0.node_count() == 1);
  // depth 1: root plus the three 2-element subsets.
  LatticeView v1(3, 1, 1000);
  CHECK(v1.node_count() == 4);
  CHECK(v1.level_size(0) == 1);
  CHECK(v1.level_size(1) == 3);
  // depth 3: the full power set including the empty set.
  LatticeView v3(3, 3, 1000);
  CHECK(v3.node_count() == 8);
  // depth beyond the root size clamps to the power set.
  LatticeView v9(3, 9, 1000);
  CHECK(v9.node_count() == 8);
}

TEST_CASE("node count formula, exhaustive n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    for (int lam = 0; lam <= n + 2; ++lam) {
      std::uint64_t expect = 0;
      for (int j = 0; j <= std::min(lam, n); ++j) {
        expect += binom_capped(n, j, 1ULL << 62);
      }
      LatticeView v(n, lam, 1 << 20);
      CHECK(v.node_count() == expect);
      std::uint64_t total = 0;
      for (int j = 0; j <= v.depth(); ++j) total += v.level_size(j);
      CHECK(total == expect);
    }
  }
}

TEST_CASE("budget guard on enumeration") {
  CHECK_THROWS_AS(LatticeView(40, 20, 1000), BudgetExceededError);
  // Large roots support removal depth <= 4 only.
  CHECK_THROWS_AS(LatticeView(100, 5, 1ULL << 60), BudgetExceededError);
  LatticeView ok(100, 3, 1ULL << 60);
  CHECK(ok.node_count() == 1 + 100 + 4950 + 161700);
}

TEST_CASE("wide codec parent/child round trips") {
  LatticeView wide(70, 3, 1ULL << 40);
  CHECK(wide.wide());
  CHECK(wide.level_size(2) == 70 * 69 / 2);
  std::uint32_t removed[4];
  const std::uint64_t key = wide.level(3)[12345];
  wide.removal_indices(key, 3, removed);
  CHECK(removed[0] < removed[1]);
  CHECK(removed[1] < removed[2]);
  for (int slot = 0; slot < 3; ++slot) {
    const std::uint64_t pk = wide.parent_key(key, 3, slot);
    CHECK(wide.find(2, pk) >= 0);
    CHECK(wide.child_key(pk, 2, removed[slot]) == key);
  }
}

TEST_CASE("query clamps, caches, and counts distinct subsets") {
  const Dataset x = Dataset::from_elements({"a", "b", "c"});
  int calls = 0;
  Evaluator ev = [&calls](const SubsetQuery&) {
    ++calls;
    return 7.0;
  };
  BlackBox box(x, ev, RangeSpec::interval(0, 10), {});
  CHECK(box.eval_removed(nullptr, 0) == 7.0);
  CHECK(box.ledger().distinct == 1);
  CHECK(box.eval_removed(nullptr, 0) == 7.0);  // cache hit
  CHECK(box.ledger().distinct == 1);
  CHECK(calls == 1);

  // Values outside the declared range are replaced with the closest value.
  BlackBox liar(x, [](const SubsetQuery&) { return 12.0; },
                RangeSpec::interval(0, 10), {});
  CHECK(liar.eval_removed(nullptr, 0) == 10.0);

  BlackBox grid(x, [](const SubsetQuery&) { return 3.4; },
                RangeSpec::finite_list({0, 1, 2, 3, 4}), {});
  CHECK(grid.eval_removed(nullptr, 0) == 3.0);
}

TEST_CASE("locality guard trips on deep queries") {
  const Dataset x = Dataset::from_elements({"a", "b", "c", "d"});
  BlackBox box(x, [](const SubsetQuery& q) { return 1.0 * q.kept_size(); },
               RangeSpec::unbounded(), {});
  box.set_locality_guard(1);
  std::uint32_t one[] = {0};
  CHECK(box.eval_removed(one, 1) == 3.0);
  std::uint32_t two[] = {0, 1};
  CHECK_THROWS_AS(box.eval_removed(two, 2), LocalityViolationError);
}

TEST_CASE("cache transparency on random query sequences") {
  RandomStream rng(42);
  const tt::TableFn f = tt::random_table(6, rng, -5, 5);
  BlackBox cached = tt::full_box(f);
  std::vector<double> a, b;
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t mask = rng.next_u64() & 63;
    std::vector<std::uint32_t> removed;
    for (int i = 0; i < 6; ++i) {
      if (!(mask & (1ULL << i))) removed.push_back(i);
    }
    a.push_back(cached.eval_removed(removed));
    BlackBox fresh = tt::full_box(f);  // uncached twin
    b.push_back(fresh.eval_removed(removed));
  }
  CHECK(a == b);
}

TEST_CASE("multiset adapter round trip") {
  const Dataset d = multiset_to_dataset({"5", "5", "7"});
  CHECK(d.size() == 3);
  CHECK(d.contains("5#1"));
  CHECK(d.contains("5#2"));
  CHECK(d.contains("7#1"));
  CHECK(dataset_to_multiset(d) == std::vector<std::string>{"5", "5", "7"});

  CHECK(multiset_to_dataset({}).size() == 0);
  const Dataset single = multiset_to_dataset({"3"});
  CHECK(single.size() == 1);
  CHECK(single.contains("3#1"));
}

TEST_CASE("multiset round trip, exhaustive small alphabets") {
  for (int size = 0; size <= 8; ++size) {
    for (int a = 0; a <= size; ++a) {
      std::vector<std::string> values;
      for (int i = 0; i < a; ++i) values.push_back("x");
      for (int i = a; i < size; ++i) values.push_back("y");
      std::vector<std::string> sorted = values;
      std::sort(sorted.begin(), sorted.end());
      CHECK(dataset_to_multiset(multiset_to_dataset(values)) == sorted);
    }
  }
}

TEST_CASE("numeric builtins evaluate via removal lists") {
  const Dataset x = Dataset::from_elements({"1.5", "2.5", "4.0", "8.0"});
  BlackBox sum(x, bind_builtin("sum-clamped", x), RangeSpec::unbounded(), {});
  CHECK(sum.eval_removed(nullptr, 0) == doctest::Approx(16.0));
  std::uint32_t rm[] = {1, 3};  // remove "2.5" and "8.0"
  CHECK(sum.eval_removed(rm, 2) == doctest::Approx(5.5));

  BlackBox avg(x, bind_builtin("average-clamped", x), RangeSpec::unbounded(), {});
  CHECK(avg.eval_removed(rm, 2) == doctest::Approx(2.75));

  BlackBox med(x, bind_builtin("median", x), RangeSpec::unbounded(), {});
  CHECK(med.eval_removed(nullptr, 0) == doctest::Approx(3.25));  // (2.5+4)/2
  std::uint32_t rm1[] = {0};
  CHECK(med.eval_removed(rm1, 1) == doctest::Approx(4.0));

  // Multiset-adapted ids keep their numeric prefix.
  const Dataset ms = multiset_to_dataset({"5", "5", "7"});
  BlackBox msum(ms, bind_builtin("sum-clamped", ms), RangeSpec::unbounded(), {});
  CHECK(msum.eval_removed(nullptr, 0) == doctest::Approx(17.0));
}

TEST_SUITE_END();
