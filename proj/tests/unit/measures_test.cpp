// Copyright 2026 The textnet Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "textnet/measures.hpp"
#include "textnet/network.hpp"

namespace textnet {
namespace {

using Edges = std::vector<std::pair<NodeId, NodeId>>;

const std::vector<std::string> kCanonical = {
    "complex", "network", "model",   "property", "text",
    "complex", "text",    "display", "complex",  "organization"};
// node order of kCanonical's network
const std::vector<std::string> kWords = {"complex", "network", "model",
                                         "property", "text",   "display",
                                         "organization"};

AdjacencyNetwork cycle(std::size_t n) {
  Edges e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return AdjacencyNetwork::from_edges(n, e);
}

AdjacencyNetwork path3() {
  const Edges e = {{0, 1}, {1, 2}};
  return AdjacencyNetwork::from_edges(3, e);
}

AdjacencyNetwork star(std::size_t leaves) {
  Edges e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return AdjacencyNetwork::from_edges(leaves + 1, e);
}

TEST(Accessibility, CycleOfFive) {
  const auto net = cycle(5);
  for (NodeId v = 0; v < 5; ++v) EXPECT_NEAR(accessibility(net, v, 2), 2.0, 1e-12);
}

TEST(Accessibility, PathEndIsForced) {
  EXPECT_NEAR(accessibility(path3(), 0, 2), 1.0, 1e-12);
}

TEST(Accessibility, PathMiddleIsAbsorbed) {
  const auto dist = self_avoiding_walk_distribution(path3(), 1, 2);
  ASSERT_EQ(dist.size(), 2u);
  EXPECT_DOUBLE_EQ(dist[0].second, 0.5);
  EXPECT_DOUBLE_EQ(dist[1].second, 0.5);
  EXPECT_NEAR(accessibility(path3(), 1, 2), 2.0, 1e-12);
}

TEST(Accessibility, RejectsOtherLevels) {
  EXPECT_THROW(accessibility(path3(), 0, 1), Error);
  EXPECT_THROW(accessibility(path3(), 0, 4), Error);
  EXPECT_THROW(accessibility(path3(), 7, 2), Error);
}

TEST(Accessibility, SampleNetworkFrozenValues) {
  const auto net = AdjacencyNetwork::from_tokens(kCanonical);
  const std::vector<double> a2 = {4.756828460010884, 3.464101615137755, 2.0,
                                  2.82842712474619,  4.326748710922225,
                                  4.898979485566356, 2.9999999999999996};
  const std::vector<double> a3 = {3.363585661014858,  2.672696154421018,
                                  3.7010086375868214, 2.309401076758503,
                                  3.2892536194462973, 3.6064021890583366,
                                  3.77976314968462};
  for (std::size_t i = 0; i < kWords.size(); ++i) {
    const NodeId v = *net.find(kWords[i]);
    EXPECT_NEAR(accessibility(net, v, 2), a2[i], 1e-12) << kWords[i];
    EXPECT_NEAR(accessibility(net, v, 3), a3[i], 1e-12) << kWords[i];
  }
}

TEST(Accessibility, MatchesTupleEnumerationAndConservesMass) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = oracle::random_graph(3 + seed % 8, 0.35, seed);
    const auto net = g.network();
    for (int h : {2, 3}) {
      for (NodeId v = 0; v < g.n; ++v) {
        const auto mass = oracle::walk_endpoint_mass(g, v, h);
        double total = 0.0;
        for (const auto& [node, p] : self_avoiding_walk_distribution(net, v, h)) {
          EXPECT_NEAR(p, mass[node], 1e-12);
          total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        const double a = accessibility(net, v, h);
        EXPECT_NEAR(a, oracle::accessibility(g, v, h), 1e-9);
        EXPECT_GE(a, 1.0 - 1e-12);
        const auto d = oracle::all_pairs_distance(g);
        std::size_t within = 0;
        for (std::size_t u = 0; u < g.n; ++u) {
          if (d[v][u] >= 0 && d[v][u] <= h) ++within;
        }
        EXPECT_LE(a, static_cast<double>(within) + 1e-9);
      }
    }
  }
}

TEST(NeighborDegree, StarRegularAndSampleNetwork) {
  const auto s = star(4);
  EXPECT_DOUBLE_EQ(avg_neighbor_degree(s, 0), 1.0);
  for (NodeId v = 1; v <= 4; ++v) EXPECT_DOUBLE_EQ(avg_neighbor_degree(s, v), 4.0);
  const auto c = cycle(6);
  for (NodeId v = 0; v < 6; ++v) EXPECT_DOUBLE_EQ(avg_neighbor_degree(c, v), 2.0);
  const auto net = AdjacencyNetwork::from_tokens(kCanonical);
  const double expected = (net.degree(*net.find("complex")) +
                           net.degree(*net.find("model"))) / 2.0;
  EXPECT_DOUBLE_EQ(avg_neighbor_degree(net, *net.find("network")), expected);
  EXPECT_DOUBLE_EQ(avg_neighbor_degree(AdjacencyNetwork::from_edges(1, Edges{}), 0), 0.0);
}

TEST(Clustering, TriangleStarAndSampleNetwork) {
  const Edges tri = {{0, 1}, {1, 2}, {0, 2}};
  const auto t = AdjacencyNetwork::from_edges(3, tri);
  for (NodeId v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(clustering(t, v), 1.0);
  EXPECT_DOUBLE_EQ(clustering(star(5), 0), 0.0);
  const auto net = AdjacencyNetwork::from_tokens(kCanonical);
  const std::vector<double> c = {1.0 / 6.0, 0, 0, 0, 1.0 / 3.0, 1.0, 0};
  for (std::size_t i = 0; i < kWords.size(); ++i) {
    EXPECT_DOUBLE_EQ(clustering(net, *net.find(kWords[i])), c[i]);
  }
}

TEST(Clustering, MatchesTriangleCount) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto g = oracle::random_graph(8, 0.45, seed);
    const auto net = g.network();
    for (NodeId v = 0; v < 8; ++v) {
      EXPECT_DOUBLE_EQ(clustering(net, v), oracle::clustering(g, v));
    }
  }
}

TEST(Betweenness, PathCycleAndSampleNetwork) {
  EXPECT_EQ(betweenness(path3()), (std::vector<double>{0, 1, 0}));
  const auto c4 = betweenness(cycle(4));
  for (double b : c4) EXPECT_DOUBLE_EQ(b, c4[0]);
  EXPECT_DOUBLE_EQ(c4[0], 0.5);
  const auto net = AdjacencyNetwork::from_tokens(kCanonical);
  const auto b = betweenness(net);
  const std::vector<double> expected = {7.5, 2.5, 1.0, 1.5, 3.5, 0.0, 0.0};
  for (std::size_t i = 0; i < kWords.size(); ++i) {
    EXPECT_DOUBLE_EQ(b[*net.find(kWords[i])], expected[i]) << kWords[i];
  }
}

TEST(Betweenness, MatchesExplicitPathEnumeration) {
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    const auto g = oracle::random_graph(4 + seed % 27, 0.2, seed);
    const auto b = betweenness(g.network());
    const auto expected = oracle::betweenness(g);
    for (std::size_t v = 0; v < g.n; ++v) EXPECT_NEAR(b[v], expected[v], 1e-9);
  }
}

TEST(Betweenness, TreeFormula) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = oracle::random_tree(2 + seed * 5 % 49, seed);
    const auto b = betweenness(g.network());
    const auto expected = oracle::tree_betweenness(g);
    for (std::size_t v = 0; v < g.n; ++v) EXPECT_DOUBLE_EQ(b[v], expected[v]);
  }
}

TEST(ShortestPaths, CountsMatchEnumeration) {
  for (std::uint64_t seed = 300; seed < 330; ++seed) {
    const auto g = oracle::random_graph(10, 0.3, seed);
    const auto net = g.network();
    const auto d = oracle::all_pairs_distance(g);
    const auto sigma = oracle::shortest_path_counts(g);
    for (NodeId s = 0; s < g.n; ++s) {
      const auto sp = bfs_shortest_paths(net, s);
      for (std::size_t t = 0; t < g.n; ++t) {
        EXPECT_EQ(sp.distance[t], d[s][t]);
        EXPECT_EQ(static_cast<std::int64_t>(sp.count[t]),
                  d[s][t] < 0 ? 0 : (s == t ? 1 : sigma[s][t]));
      }
    }
  }
}

TEST(ShortestPaths, MeanDistanceConventions) {
  const auto p = shortest_path_stats(path3());
  EXPECT_DOUBLE_EQ(*p[0], 1.5);
  EXPECT_DOUBLE_EQ(*p[1], 1.0);
  Edges k5;
  for (NodeId u = 0; u < 5; ++u) {
    for (NodeId v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  }
  for (const auto& l : shortest_path_stats(AdjacencyNetwork::from_edges(5, k5))) {
    EXPECT_DOUBLE_EQ(*l, 1.0);
  }
}

TEST(ShortestPaths, DisjointEdgesAndIsolatedNode) {
  const Edges two = {{0, 1}, {2, 3}};
  const auto l = shortest_path_stats(AdjacencyNetwork::from_edges(5, two));
  for (int v = 0; v < 4; ++v) EXPECT_DOUBLE_EQ(*l[v], 1.0);
  EXPECT_FALSE(l[4].has_value());
}

TEST(MeasureNodes, AgreesWithSeparateCalls) {
  const auto net = AdjacencyNetwork::from_tokens(kCanonical);
  const auto m = measure_nodes(net);
  const auto b = betweenness(net);
  const auto l = shortest_path_stats(net);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    EXPECT_DOUBLE_EQ(m.alpha2[v], accessibility(net, v, 2));
    EXPECT_DOUBLE_EQ(m.alpha3[v], accessibility(net, v, 3));
    EXPECT_DOUBLE_EQ(m.neighbor_degree[v], avg_neighbor_degree(net, v));
    EXPECT_DOUBLE_EQ(m.clustering[v], clustering(net, v));
    EXPECT_DOUBLE_EQ(m.betweenness[v], b[v]);
    EXPECT_EQ(m.path_length[v], l[v]);
  }
  EXPECT_EQ(m.isolated_nodes, 0u);
}

TEST(Measures, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 400; seed < 420; ++seed) {
    const auto g = oracle::random_graph(12, 0.3, seed);
    std::vector<std::size_t> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = measure_nodes(g.network());
    const auto b = measure_nodes(oracle::relabel(g, perm).network());
    for (std::size_t v = 0; v < g.n; ++v) {
      const auto w = perm[v];
      EXPECT_DOUBLE_EQ(a.clustering[v], b.clustering[w]);
      EXPECT_DOUBLE_EQ(a.neighbor_degree[v], b.neighbor_degree[w]);
      EXPECT_NEAR(a.betweenness[v], b.betweenness[w], 1e-9);
      EXPECT_NEAR(a.alpha3[v], b.alpha3[w], 1e-9);
    }
  }
}

TEST(Intermittency, EvenlySpacedWithLongerWrap) {
  const std::vector<std::size_t> pos = {1, 4, 7, 10};
  const auto w = intermittency_from_positions(pos, 12);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->recurrence, (std::vector<long long>{3, 3, 3, 4}));
  // sqrt(43/4 / (13/4)^2 - 1) = sqrt(3/169)
  EXPECT_NEAR(w->value, 0.13323467750529777, 1e-12);
  EXPECT_NEAR(w->value, std::sqrt(3.0) / 13.0, 1e-15);
}

TEST(Intermittency, UnevenSpacing) {
  const std::vector<std::size_t> pos = {2, 5, 11};
  const auto w = intermittency_from_positions(pos, 12);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->recurrence, (std::vector<long long>{3, 6, 4}));
  EXPECT_NEAR(w->value, 0.28781979898261123, 1e-12);
}

TEST(Intermittency, PeriodicWordIsZero) {
  const std::vector<std::size_t> pos = {1, 4, 7, 10};
  const auto w = intermittency_from_positions(pos, 11);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->recurrence, (std::vector<long long>{3, 3, 3, 3}));
  EXPECT_EQ(w->value, 0.0);
}

TEST(Intermittency, RecurrenceSumsToLengthPlusOne) {
  const std::vector<std::size_t> pos = {2, 3, 9, 17, 18};
  const auto w = intermittency_from_positions(pos, 20);
  ASSERT_TRUE(w);
  EXPECT_EQ(std::accumulate(w->recurrence.begin(), w->recurrence.end(), 0LL), 21);
  const auto gap =
      intermittency_from_positions(pos, 20, RecurrenceConvention::kGap);
  ASSERT_TRUE(gap);
  EXPECT_EQ(gap->recurrence, (std::vector<long long>{0, 5, 7, 0, 3}));
}

TEST(Intermittency, ReversalInvariant) {
  const std::vector<std::size_t> pos = {2, 5, 11, 13};
  const auto base = intermittency_from_positions(pos, 15);
  std::vector<std::size_t> mirrored;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) mirrored.push_back(16 - *it);
  const auto w = intermittency_from_positions(mirrored, 15);
  ASSERT_TRUE(w);
  EXPECT_NEAR(w->value, base->value, 1e-15);
  EXPECT_EQ(w->recurrence.back(), base->recurrence.back());
}

TEST(Intermittency, StreamInterfaceAndFrequencyFloor) {
  const std::vector<std::string> s = {"a", "b", "b", "c", "a", "b", "c", "a"};
  EXPECT_FALSE(intermittency(s, "z", 1));
  EXPECT_FALSE(intermittency(s, "c", 3));
  const auto a = intermittency(s, "a", 2);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->occurrences, 3u);
  EXPECT_EQ(a->recurrence, (std::vector<long long>{4, 3, 2}));
  const auto all = intermittency_all(s, 3);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].word, "a");
  EXPECT_EQ(all[1].word, "b");
}

TEST(Intermittency, AllZeroGapsAreExcluded) {
  const std::vector<std::string> s = {"x", "x", "x"};
  EXPECT_FALSE(intermittency(s, "x", 2, RecurrenceConvention::kGap));
}

TEST(MeasurementDump, Columns) {
  const std::vector<std::string> tokens = {"a", "b", "a", "c"};
  const auto net = AdjacencyNetwork::from_tokens(tokens);
  const auto m = measure_nodes(net);
  const auto words = intermittency_all(tokens, 2);
  std::ostringstream out;
  write_measurement_dump(out, net, m, words);
  std::istringstream in(out.str());
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  EXPECT_EQ(header, "word,alpha2,alpha3,kn,B,C,l,I");
  EXPECT_EQ(first.substr(0, 2), "a,");
  EXPECT_NE(first.back(), ',');
  EXPECT_EQ(second.back(), ',');
}

}  // namespace
}  // namespace textnet
