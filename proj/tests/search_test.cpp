// Copyright 2026 The netdesign Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <optional>
#include <vector>

#include <gtest/gtest.h>

#include "netdesign/automorph.hpp"
#include "netdesign/builders.hpp"
#include "netdesign/enumerate.hpp"
#include "netdesign/lnem.hpp"
#include "netdesign/search.hpp"
#include "test_support.hpp"

namespace netdesign {
namespace {

using testing::Example;
using testing::Letters;

constexpr double kExampleOneOptimum = 18.0 / 43.0;

SearchConfig Exhaustive(bool autos, bool labels = true) {
  SearchConfig config;
  config.use_automorphisms = autos;
  config.use_label_symmetry = labels;
  return config;
}

void ExpectCountersConsistent(const SearchReport& r) {
  EXPECT_EQ(r.num_considered,
            r.num_eval + r.num_skipped_noncanonical + r.num_invalid);
}

void ExpectSameReport(const SearchReport& a, const SearchReport& b) {
  EXPECT_EQ(a.best_design, b.best_design);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.num_eval, b.num_eval);
  EXPECT_EQ(a.num_considered, b.num_considered);
  EXPECT_EQ(a.num_skipped_noncanonical, b.num_skipped_noncanonical);
  EXPECT_EQ(a.num_invalid, b.num_invalid);
  EXPECT_EQ(a.partial, b.partial);
}

TEST(Improves, OrderingRules) {
  EXPECT_TRUE(improves(1.0, std::nullopt));
  EXPECT_FALSE(improves(std::nullopt, 1.0));
  EXPECT_FALSE(improves(std::nullopt, std::nullopt));
  EXPECT_TRUE(improves(0.5, 1.0));
  EXPECT_FALSE(improves(1.0, 1.0));
  EXPECT_FALSE(improves(1.0 - 1e-15, 1.0));
}

TEST(ExhaustiveSearch, PathNetworkSkipsTwoOfEight) {
  const Network net = testing::PathNetwork();
  const ModelSpec spec(net, 2);
  const SearchReport r = exhaustive_search(net, spec, Exhaustive(true, false));
  EXPECT_EQ(r.num_considered, 8u);
  EXPECT_EQ(r.num_eval + r.num_invalid, 6u);
  EXPECT_EQ(r.num_skipped_noncanonical, 2u);
  EXPECT_EQ(r.group_size, 2u);
  ExpectCountersConsistent(r);
}

TEST(ExhaustiveSearch, ExampleOneCounts) {
  const Network net = Example(1);
  const ModelSpec spec(net, 2);
  const SearchReport without = exhaustive_search(net, spec, Exhaustive(false));
  const SearchReport with = exhaustive_search(net, spec, Exhaustive(true));
  EXPECT_EQ(without.num_considered, 512u);
  EXPECT_EQ(without.num_invalid, 4u);
  EXPECT_EQ(without.num_eval, 508u);
  EXPECT_EQ(with.num_eval, 237u);
  EXPECT_EQ(with.group_size, 8u);
  ASSERT_TRUE(with.best_value && without.best_value);
  EXPECT_EQ(*with.best_value, *without.best_value);
  EXPECT_EQ(with.best_design, without.best_design);
  EXPECT_NEAR(*with.best_value, kExampleOneOptimum, 1e-12);
  EXPECT_EQ(*with.best_value, *criterion_for_design(net, with.best_design, spec));
  ExpectCountersConsistent(with);
  ExpectCountersConsistent(without);
}

TEST(ExhaustiveSearch, IdentifiedRuleCounts) {
  const auto counts = [](int k, int m, bool autos) {
    const Network net = Example(k);
    const ModelSpec spec(net, m, Criterion::kAs, Validity::kIdentified);
    return exhaustive_search(net, spec, Exhaustive(autos));
  };
  const SearchReport without = counts(1, 2, false);
  const SearchReport with = counts(1, 2, true);
  EXPECT_EQ(without.num_eval, 507u);
  EXPECT_EQ(with.num_eval, 236u);
  EXPECT_EQ(with.best_value, without.best_value);
  EXPECT_NEAR(*with.best_value, kExampleOneOptimum, 1e-12);
  EXPECT_EQ(counts(2, 2, true).num_eval, 511u);
  EXPECT_EQ(counts(4, 4, true).num_eval, 18766u);
}

TEST(ExhaustiveSearch, InvalidCountingIsConfigurable) {
  const Network net = Example(1);
  const ModelSpec spec(net, 2);
  SearchConfig config = Exhaustive(false);
  config.count_invalid_as_eval = true;
  const SearchReport r = exhaustive_search(net, spec, config);
  EXPECT_EQ(r.num_eval, 512u);
  EXPECT_EQ(r.num_invalid, 4u);
}

TEST(ExhaustiveSearch, TrivialGroupGivesIdenticalReports) {
  const Network net = Example(2);
  const ModelSpec spec(net, 2);
  const SearchReport without = exhaustive_search(net, spec, Exhaustive(false));
  const SearchReport with = exhaustive_search(net, spec, Exhaustive(true));
  EXPECT_EQ(with.num_eval, 511u);
  ExpectSameReport(with, without);
}

TEST(ExhaustiveSearch, LabelSymmetryDoesNotChangeTheOptimum) {
  const Network net = Example(1);
  const ModelSpec spec(net, 2);
  const SearchReport full = exhaustive_search(net, spec, Exhaustive(false, false));
  const SearchReport reduced = exhaustive_search(net, spec, Exhaustive(false, true));
  EXPECT_EQ(full.num_considered, 1024u);
  EXPECT_EQ(full.best_value, reduced.best_value);
}

struct Case {
  const char* name;
  Network net;
  int m;
};

std::vector<Case> SoundnessCases() {
  std::vector<Case> cases;
  for (int k = 1; k <= 6; ++k) {
    cases.push_back({"example", Example(k), 2});
    if (k != 3) cases.push_back({"example", Example(k), 3});
  }
  cases.push_back({"blocks 3x3", augment_blocks(std::vector<int>{3, 3, 3}, 3), 3});
  cases.push_back({"blocks 3x4", augment_blocks(std::vector<int>{3, 3, 3, 3}, 3), 3});
  cases.push_back({"row-column 3x3", augment_row_column(3, 3, 3), 3});
  return cases;
}

TEST(ExhaustiveSearch, PruningIsSound) {
  for (const Case& c : SoundnessCases()) {
    SCOPED_TRACE(std::string(c.name) + " n=" + std::to_string(c.net.num_nodes()) +
                 " m=" + std::to_string(c.m));
    const ModelSpec spec(c.net, c.m);
    const SearchReport without = exhaustive_search(c.net, spec, Exhaustive(false));
    const SearchReport with = exhaustive_search(c.net, spec, Exhaustive(true));
    ASSERT_TRUE(without.best_value.has_value());
    EXPECT_EQ(with.best_value, without.best_value);
    EXPECT_LE(with.num_eval, without.num_eval);
    EXPECT_EQ(with.num_considered, without.num_considered);
    ExpectCountersConsistent(with);
    ExpectCountersConsistent(without);
    EXPECT_EQ(*with.best_value,
              *criterion_for_design(c.net, with.best_design, spec));
  }
}

TEST(ExhaustiveSearch, IndependentOfWorkerCount) {
  const Network net = Example(4);
  const ModelSpec spec(net, 3);
  SearchConfig config = Exhaustive(true);
  config.workers = 1;
  const SearchReport one = exhaustive_search(net, spec, config);
  config.workers = 3;
  const SearchReport three = exhaustive_search(net, spec, config);
  config.workers = 8;
  const SearchReport eight = exhaustive_search(net, spec, config);
  ExpectSameReport(one, three);
  ExpectSameReport(one, eight);
}

TEST(ExhaustiveSearch, BudgetGivesPartialReport) {
  const Network net = Example(1);
  const ModelSpec spec(net, 2);
  SearchConfig config = Exhaustive(false);
  config.max_designs = 100;
  const SearchReport r = exhaustive_search(net, spec, config);
  EXPECT_TRUE(r.partial);
  EXPECT_EQ(r.num_considered, 100u);
  ExpectCountersConsistent(r);
  config.max_designs = 512;
  EXPECT_FALSE(exhaustive_search(net, spec, config).partial);
}

TEST(ExhaustiveSearch, ReferenceValueGivesEfficiency) {
  const Network net = Example(1);
  const ModelSpec spec(net, 2);
  SearchConfig config = Exhaustive(true);
  config.reference_value = kExampleOneOptimum;
  const SearchReport r = exhaustive_search(net, spec, config);
  ASSERT_TRUE(r.efficiency.has_value());
  EXPECT_NEAR(*r.efficiency, 1.0, 1e-12);
}

SearchConfig Descent(int restarts, std::uint64_t seed, bool autos = true) {
  SearchConfig config;
  config.algorithm = Algorithm::kCoordinateDescent;
  config.restarts = restarts;
  config.seed = seed;
  config.use_automorphisms = autos;
  return config;
}

TEST(CoordinateDescent, StartingAtTheOptimumStopsAfterOneSweep) {
  const Network net = Example(1);
  const ModelSpec spec(net, 2);
  const SearchReport best = exhaustive_search(net, spec, Exhaustive(false));
  for (bool autos : {false, true}) {
    SearchConfig config = Descent(1, 0, autos);
    config.start_designs = {best.best_design};
    const SearchReport r = coordinate_descent(net, spec, config);
    EXPECT_EQ(r.best_design, autos ? orbit_representative(best.best_design,
                                                          find_automorphisms(net),
                                                          true)
                                   : best.best_design);
    EXPECT_EQ(r.best_value, best.best_value);
    EXPECT_LE(r.num_eval, 10u * (2 - 1) + 1);
    // One sweep proposes every single-node change once.
    EXPECT_EQ(r.num_considered, 10u * (2 - 1) + 1);
  }
}

TEST(CoordinateDescent, ExampleOneReachesTheOptimum) {
  const Network net = Example(1);
  const ModelSpec spec(net, 2);
  SearchConfig config = Descent(100, 1);
  config.reference_value = kExampleOneOptimum;
  const SearchReport r = coordinate_descent(net, spec, config);
  ASSERT_TRUE(r.efficiency.has_value());
  EXPECT_NEAR(*r.efficiency, 1.0, 1e-9);
  EXPECT_LE(r.num_eval, 237u);
  ExpectCountersConsistent(r);
}

TEST(CoordinateDescent, AutomorphismsOnlyRemoveRepeatEvaluations) {
  for (int k : {1, 3, 5}) {
    const Network net = Example(k);
    const ModelSpec spec(net, k == 5 ? 3 : 2);
    const SearchReport plain = coordinate_descent(net, spec, Descent(20, 9, false));
    const SearchReport pruned = coordinate_descent(net, spec, Descent(20, 9, true));
    EXPECT_EQ(plain.best_value, pruned.best_value);
    EXPECT_EQ(plain.num_considered, pruned.num_considered);
    EXPECT_LE(pruned.num_eval, plain.num_eval);
  }
}

TEST(CoordinateDescent, DeterministicAcrossWorkerCounts) {
  const Network net = Example(5);
  const ModelSpec spec(net, 3);
  SearchConfig config = Descent(16, 42);
  config.workers = 1;
  const SearchReport one = coordinate_descent(net, spec, config);
  config.workers = 4;
  const SearchReport four = coordinate_descent(net, spec, config);
  ExpectSameReport(one, four);
  EXPECT_EQ(one.seed, 42u);
  config.seed = 43;
  const SearchReport other = coordinate_descent(net, spec, config);
  EXPECT_EQ(other.seed, 43u);
}

TEST(RunWithPlugins, ReproducesTheWalkthroughEndingAtBBB) {
  const Network net = testing::PathNetwork();
  const ModelSpec spec(net, 2);
  SearchConfig config = Exhaustive(true, false);
  const SearchReport r =
      run_with_plugins(net, spec, lexicographic_next(3, 2, false),
                       stop_at_design(Letters("BBB")), config);
  EXPECT_EQ(r.num_considered, 8u);
  EXPECT_EQ(r.num_skipped_noncanonical, 2u);
  EXPECT_FALSE(r.partial);
  const SearchReport direct = exhaustive_search(net, spec, config);
  ExpectSameReport(r, direct);
}

TEST(RunWithPlugins, EvaluationBudgetOfOne) {
  const Network net = Example(1);
  const ModelSpec spec(net, 2);
  const SearchReport r =
      run_with_plugins(net, spec, lexicographic_next(10, 2, true),
                       stop_after_evaluations(1), Exhaustive(true));
  EXPECT_EQ(r.num_eval, 1u);
}

TEST(RunWithPlugins, SeededRandomStreamIsReproducible) {
  const Network net = Example(3);
  const ModelSpec spec(net, 2);
  const auto run = [&](std::uint64_t seed) {
    return run_with_plugins(net, spec, random_next(20, 2, seed),
                            stop_after_evaluations(50), Exhaustive(true),
                            {OrbitPolicy::kRepresentativeCache});
  };
  const SearchReport a = run(5);
  ExpectSameReport(a, run(5));
  EXPECT_EQ(a.num_eval, 50u);
}

TEST(RunWithPlugins, ExhaustiveFormulationMatches) {
  for (int k : {1, 2, 4}) {
    const Network net = Example(k);
    const ModelSpec spec(net, 2);
    for (bool autos : {false, true}) {
      const SearchConfig config = Exhaustive(autos);
      const SearchReport plugin = run_with_plugins(
          net, spec, lexicographic_next(net.num_design_nodes(), 2, true),
          never_stop(), config);
      ExpectSameReport(plugin, exhaustive_search(net, spec, config));
    }
  }
}

TEST(RunWithPlugins, CoordinateDescentFormulationMatches) {
  std::mt19937_64 rng(77);
  for (int k : {1, 3, 5, 6}) {
    const Network net = Example(k);
    const int m = k >= 5 ? 3 : 2;
    const ModelSpec spec(net, m);
    for (int t = 0; t < 5; ++t) {
      const Design start = testing::RandomDesign(rng, net.num_design_nodes(), m);
      for (bool autos : {false, true}) {
        SearchConfig config = Descent(1, 0, autos);
        config.start_designs = {start};
        const SearchReport direct = coordinate_descent(net, spec, config);
        const SearchReport plugin = run_with_plugins(
            net, spec, coordinate_descent_next(start, m), never_stop(), config,
            {OrbitPolicy::kRepresentativeCache});
        EXPECT_EQ(plugin.best_value, direct.best_value);
        EXPECT_EQ(plugin.num_eval, direct.num_eval);
        EXPECT_EQ(plugin.num_considered, direct.num_considered);
      }
    }
  }
}

}  // namespace
}  // namespace netdesign
