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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "netdesign/automorph.hpp"
#include "netdesign/builders.hpp"
#include "netdesign/enumerate.hpp"
#include "netdesign/error.hpp"
#include "test_support.hpp"

namespace netdesign {
namespace {

using testing::Example;
using testing::Letters;
using Perm = std::vector<NodeId>;

std::set<Perm> Elements(const AutomorphismGroup& g) {
  std::set<Perm> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto e = g.element(k);
    out.emplace(e.begin(), e.end());
  }
  return out;
}

int RoleKey(const Network& net, NodeId i) {
  const NodeRole& r = net.role(i);
  if (!r.is_block()) return 0;
  for (const auto& group : net.exchangeable_classes()) {
    if (std::find(group.begin(), group.end(), r.class_id) != group.end()) {
      return *std::min_element(group.begin(), group.end());
    }
  }
  return r.class_id;
}

// Every permutation of the node set, kept when it preserves A and roles.
std::set<Perm> BruteForceAutomorphisms(const Network& net) {
  const auto n = static_cast<NodeId>(net.num_nodes());
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::set<Perm> out;
  do {
    bool ok = true;
    for (NodeId i = 0; i < n && ok; ++i) {
      ok = RoleKey(net, i) == RoleKey(net, p[static_cast<std::size_t>(i)]);
      for (NodeId k = 0; k < n && ok; ++k) {
        ok = net.adjacent(i, k) == net.adjacent(p[static_cast<std::size_t>(i)],
                                                p[static_cast<std::size_t>(k)]);
      }
    }
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Burnside: orbits of m^N designs are the average of m^(cycles on design
// nodes) over the group.
std::uint64_t BurnsideOrbits(const Network& net, const std::set<Perm>& group,
                             int m) {
  std::uint64_t total = 0;
  for (const Perm& p : group) {
    std::vector<bool> seen(p.size(), false);
    int cycles = 0;
    for (NodeId d : net.design_nodes()) {
      if (seen[static_cast<std::size_t>(d)]) continue;
      ++cycles;
      for (NodeId v = d; !seen[static_cast<std::size_t>(v)];
           v = p[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
    std::uint64_t fixed = 1;
    for (int c = 0; c < cycles; ++c) fixed *= static_cast<std::uint64_t>(m);
    total += fixed;
  }
  return total / group.size();
}

Network RandomNetwork(std::mt19937_64& rng, std::size_t n, bool directed,
                      double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < static_cast<NodeId>(n); ++i) {
    for (NodeId k = 0; k < static_cast<NodeId>(n); ++k) {
      if (i == k || (!directed && k < i)) continue;
      if (coin(rng)) edges.push_back({i, k, directed});
    }
  }
  return Network(n, directed, edges);
}

void ExpectAutomorphismsOf(const Network& net, const AutomorphismGroup& g) {
  const auto n = static_cast<NodeId>(net.num_nodes());
  for (std::size_t e = 0; e < g.size(); ++e) {
    const auto p = g.element(e);
    for (NodeId i = 0; i < n; ++i) {
      ASSERT_EQ(RoleKey(net, i), RoleKey(net, p[static_cast<std::size_t>(i)]));
      for (NodeId k = 0; k < n; ++k) {
        ASSERT_EQ(net.adjacent(i, k),
                  net.adjacent(p[static_cast<std::size_t>(i)],
                               p[static_cast<std::size_t>(k)]));
      }
    }
  }
}

TEST(FindAutomorphisms, ExampleGroupSizes) {
  const std::size_t expected[] = {8, 1, 8, 384, 2, 6};
  for (int k = 1; k <= 6; ++k) {
    const Network net = Example(k);
    const AutomorphismGroup g = find_automorphisms(net);
    EXPECT_EQ(g.size(), expected[k - 1]) << "example " << k;
    ExpectAutomorphismsOf(net, g);
  }
}

TEST(FindAutomorphisms, AugmentedGroupSizes) {
  const std::vector<int> b3{3, 3, 3};
  EXPECT_EQ(find_automorphisms(augment_blocks(b3, 3)).size(), 1296u);
  const std::vector<int> b4{4, 4, 4};
  EXPECT_EQ(find_automorphisms(augment_blocks(b4, 3)).size(), 82944u);
  EXPECT_EQ(find_automorphisms(augment_row_column(3, 3, 3)).size(), 72u);
  EXPECT_EQ(find_automorphisms(augment_row_column(4, 4, 4)).size(), 1152u);
  EXPECT_EQ(find_automorphisms(augment_row_column(2, 3, 2)).size(), 12u);
}

TEST(FindAutomorphisms, EqualBlocksGiveWreathProductOrder) {
  for (int s = 1; s <= 4; ++s) {
    for (int b = 1; b <= 4; ++b) {
      const std::vector<int> sizes(static_cast<std::size_t>(b), s);
      std::uint64_t expected = 1;
      for (int k = 0; k < b; ++k) {
        for (int j = 2; j <= s; ++j) expected *= static_cast<std::uint64_t>(j);
      }
      for (int j = 2; j <= b; ++j) expected *= static_cast<std::uint64_t>(j);
      const Network net = augment_blocks(sizes, 2);
      if (expected > kDefaultGroupCap) {
        EXPECT_THROW(find_automorphisms(net), GroupTooLarge);
      } else {
        EXPECT_EQ(find_automorphisms(net).size(), expected) << s << "x" << b;
      }
    }
  }
}

TEST(FindAutomorphisms, ExampleOneMatchesHandListedGenerators) {
  // Components: path 1-7-2, path 3-6-9-10, edge 4-5, isolated 8.
  const Network net = Example(1);
  const std::vector<Perm> generators = {
      {1, 0, 2, 3, 4, 5, 6, 7, 8, 9},
      {0, 1, 9, 3, 4, 8, 6, 7, 5, 2},
      {0, 1, 2, 4, 3, 5, 6, 7, 8, 9},
  };
  std::set<Perm> hand;
  for (int mask = 0; mask < 8; ++mask) {
    Perm p(10);
    std::iota(p.begin(), p.end(), 0);
    for (int g = 0; g < 3; ++g) {
      if ((mask >> g & 1) == 0) continue;
      Perm q(10);
      for (std::size_t i = 0; i < 10; ++i) q[i] = generators[g][p[i]];
      p = q;
    }
    hand.insert(p);
  }
  const AutomorphismGroup group = find_automorphisms(net);
  EXPECT_EQ(Elements(group), hand);
  EXPECT_EQ(BurnsideOrbits(net, hand, 2), 360u);
  EXPECT_EQ(count_orbits_bruteforce(group, 2), 360u);
}

TEST(FindAutomorphisms, AgreesWithPermutationBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
    const bool directed = trial % 3 == 0;
    const Network net = RandomNetwork(rng, n, directed, trial % 2 ? 0.25 : 0.5);
    EXPECT_EQ(Elements(find_automorphisms(net)), BruteForceAutomorphisms(net))
        << "trial " << trial;
  }
}

TEST(FindAutomorphisms, AugmentedAgreeWithPermutationBruteForce) {
  const std::vector<int> sizes{2, 2, 1};
  for (const Network& net :
       {augment_blocks(sizes, 2), augment_row_column(2, 2, 2),
        augment_row_column(2, 3, 2), augment_crossover(2, 3, 2, false),
        augment_crossover(2, 2, 2, true)}) {
    EXPECT_EQ(Elements(find_automorphisms(net)), BruteForceAutomorphisms(net));
  }
}

TEST(FindAutomorphisms, DirectionMatters) {
  // A transitive tournament has no symmetry; its undirected shadow is K3.
  const Network tournament = parse_edge_list("1->2, 1->3, 2->3", 3, true);
  EXPECT_EQ(find_automorphisms(tournament).size(), 1u);
  const Network triangle = parse_edge_list("1-2, 1-3, 2-3", 3, false);
  EXPECT_EQ(find_automorphisms(triangle).size(), 6u);
  const Network cycle = parse_edge_list("1->2, 2->3, 3->1", 3, true);
  EXPECT_EQ(find_automorphisms(cycle).size(), 3u);
}

TEST(FindAutomorphisms, GroupAxioms) {
  for (int k : {1, 3, 4, 5, 6}) {
    const AutomorphismGroup g = find_automorphisms(Example(k));
    const std::set<Perm> elements = Elements(g);
    ASSERT_EQ(elements.size(), g.size());
    const auto id = g.element(0);
    for (std::size_t i = 0; i < id.size(); ++i) {
      ASSERT_EQ(id[i], static_cast<NodeId>(i));
    }
    for (std::size_t a = 1; a < g.size(); ++a) {
      EXPECT_TRUE(std::lexicographical_compare(
          g.element(a - 1).begin(), g.element(a - 1).end(),
          g.element(a).begin(), g.element(a).end()));
    }
    for (const Perm& p : elements) {
      Perm inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<NodeId>(i);
      EXPECT_TRUE(elements.count(inv));
      for (const Perm& q : elements) {
        Perm pq(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) pq[i] = p[q[i]];
        ASSERT_TRUE(elements.count(pq));
      }
    }
  }
}

TEST(FindAutomorphisms, CapRaisesGroupTooLarge) {
  const std::vector<int> sizes{3, 3, 3};
  EXPECT_THROW(find_automorphisms(augment_blocks(sizes, 3), 1000),
               GroupTooLarge);
  EXPECT_NO_THROW(find_automorphisms(augment_blocks(sizes, 3), 1296));
}

TEST(IsCanonical, PathNetwork) {
  // Node 1 joined to 2 and 3; the only symmetry swaps 2 and 3.
  const AutomorphismGroup g = find_automorphisms(testing::PathNetwork());
  ASSERT_EQ(g.size(), 2u);
  EXPECT_TRUE(is_canonical(Letters("AAB"), g));
  EXPECT_FALSE(is_canonical(Letters("ABA"), g));
  EXPECT_TRUE(is_canonical(Letters("BAB"), g));
  EXPECT_FALSE(is_canonical(Letters("BBA"), g));
  int canonical = 0;
  for (const Design& x : enumerate_designs(3, 2, false)) canonical += is_canonical(x, g);
  EXPECT_EQ(canonical, 6);
  EXPECT_THROW(is_canonical(Letters("AB"), g), InvalidArgument);
}

TEST(IsCanonical, TrivialGroupAcceptsEverything) {
  const AutomorphismGroup g = find_automorphisms(Example(2));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    EXPECT_TRUE(is_canonical(testing::RandomDesign(rng, 10, 3), g));
  }
}

// One canonical design per orbit: the canonical count equals the orbit
// count from Burnside's lemma over the brute-force group.
TEST(IsCanonical, CountMatchesOrbitCount) {
  std::mt19937_64 rng(23);
  std::vector<Network> nets = {Example(1), testing::PathNetwork(),
                               parse_edge_list("1->2, 2->3, 3->1", 3, true),
                               augment_row_column(2, 2, 2),
                               augment_blocks(std::vector<int>{2, 2, 2}, 2)};
  for (int t = 0; t < 8; ++t) {
    nets.push_back(RandomNetwork(rng, 4 + static_cast<std::size_t>(t % 4),
                                 t % 2 == 1, 0.3));
  }
  for (const Network& net : nets) {
    const AutomorphismGroup g = find_automorphisms(net);
    const std::set<Perm> oracle = net.num_nodes() <= 9
                                      ? BruteForceAutomorphisms(net)
                                      : Elements(g);
    for (int m = 2; m <= 3; ++m) {
      std::uint64_t canonical = 0;
      for (const Design& x : enumerate_designs(net.num_design_nodes(), m, false)) {
        canonical += is_canonical(x, g);
      }
      EXPECT_EQ(canonical, BurnsideOrbits(net, oracle, m));
      EXPECT_EQ(canonical, count_orbits_bruteforce(g, m));
    }
  }
}

TEST(IsCanonical, CanonicalIsLexMinimumOfOrbit) {
  const AutomorphismGroup g = find_automorphisms(Example(5));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Design x = testing::RandomDesign(rng, 15, 3);
    Design smallest = x;
    for (std::size_t k = 0; k < g.size(); ++k) smallest = std::min(smallest, g.apply(k, x));
    EXPECT_EQ(is_canonical(x, g), smallest == x);
    EXPECT_EQ(orbit_representative(x, g, false), smallest);
    EXPECT_EQ(orbit_representative(x, g, true),
              [&] {
                Design best = label_canonical(x);
                for (std::size_t k = 0; k < g.size(); ++k) {
                  best = std::min(best, label_canonical(g.apply(k, x)));
                }
                return best;
              }());
  }
}

TEST(Apply, MovesLevelsAlongThePermutation) {
  const AutomorphismGroup g = find_automorphisms(testing::PathNetwork());
  // Element 1 swaps nodes 2 and 3.
  EXPECT_EQ(g.apply(1, Letters("ABA")), Letters("AAB"));
  EXPECT_EQ(g.apply(0, Letters("ABA")), Letters("ABA"));
}

TEST(CycleNotation, Formats) {
  EXPECT_EQ(cycle_notation(Perm{0, 1, 2}), "()");
  EXPECT_EQ(cycle_notation(Perm{1, 0, 2}), "(1 2)");
  EXPECT_EQ(cycle_notation(Perm{0, 1, 9, 3, 4, 8, 6, 7, 5, 2}), "(3 10)(6 9)");
  EXPECT_EQ(cycle_notation(Perm{1, 2, 0}), "(1 2 3)");
}

}  // namespace
}  // namespace netdesign
