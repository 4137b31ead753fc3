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

// Topological measurements on adjacency networks and the intermittency of
// word positions. All measurements are unweighted.

#ifndef TEXTNET_MEASURES_HPP_
#define TEXTNET_MEASURES_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textnet/network.hpp"

namespace textnet {

// Endpoint distribution of an h-step self-avoiding random walk from
// `source`. At every step the walker picks uniformly among neighbors it
// has not visited; with none left it stays put for the remaining steps.
// Entries are (node, probability) in order of first discovery; the
// probabilities sum to one.
std::vector<std::pair<NodeId, double>> self_avoiding_walk_distribution(
    const AdjacencyNetwork& net, NodeId source, int steps);

// exp of the Shannon entropy (nats) of the h-step self-avoiding walk
// endpoint distribution, computed by exhaustive enumeration.
// h must be 2 or 3.
double accessibility(const AdjacencyNetwork& net, NodeId v, int h);
std::vector<double> accessibility_all(const AdjacencyNetwork& net, int h);

// Mean degree of v's neighbors; 0 for an isolated node.
double avg_neighbor_degree(const AdjacencyNetwork& net, NodeId v);

// Fraction of neighbor pairs that are linked; 0 when deg(v) < 2.
double clustering(const AdjacencyNetwork& net, NodeId v);

struct ShortestPaths {
  std::vector<int> distance;   // -1 when unreachable
  std::vector<double> count;   // number of shortest paths from the source
};
ShortestPaths bfs_shortest_paths(const AdjacencyNetwork& net, NodeId source);

// Brandes accumulation over BFS trees. Each unordered pair {s, t} counts
// once, endpoints excluded, no normalization.
std::vector<double> betweenness(const AdjacencyNetwork& net);

// Mean hop distance from each node to the nodes it can reach; nullopt for
// nodes that reach nothing.
std::vector<std::optional<double>> shortest_path_stats(
    const AdjacencyNetwork& net);

struct NodeMeasurements {
  std::vector<double> alpha2;
  std::vector<double> alpha3;
  std::vector<double> neighbor_degree;
  std::vector<double> betweenness;
  std::vector<double> clustering;
  std::vector<std::optional<double>> path_length;
  std::size_t isolated_nodes = 0;

  std::size_t size() const { return alpha2.size(); }
};

// Every per-node measurement; betweenness and path lengths share one BFS
// per source.
NodeMeasurements measure_nodes(const AdjacencyNetwork& net);

enum class RecurrenceConvention {
  kDifference,  // t = p_{k+1} - p_k, t_I = p_1, t_F = L + 1 - p_N
  kGap,         // words strictly between: each of the above minus one
};

struct WordIntermittency {
  std::string word;
  std::size_t occurrences = 0;
  std::vector<long long> recurrence;  // t_1..t_{N-1}, then t_N = t_I + t_F
  double value = 0.0;
};

// Burstiness of `word` in `stream`: sqrt(<t^2>/<t>^2 - 1) over the
// recurrence times including the wrap term. nullopt when the word occurs
// fewer than f_min times or every recurrence time is zero.
std::optional<WordIntermittency> intermittency(
    std::span<const std::string> stream, std::string_view word,
    std::size_t f_min,
    RecurrenceConvention convention = RecurrenceConvention::kDifference);

// Intermittency of every word with at least f_min occurrences, in order of
// first occurrence.
std::vector<WordIntermittency> intermittency_all(
    std::span<const std::string> stream, std::size_t f_min,
    RecurrenceConvention convention = RecurrenceConvention::kDifference);

// Intermittency from 1-based positions in a stream of length `length`.
std::optional<WordIntermittency> intermittency_from_positions(
    std::span<const std::size_t> positions, std::size_t length,
    RecurrenceConvention convention = RecurrenceConvention::kDifference);

// CSV `word,alpha2,alpha3,kn,B,C,l,I`; I is empty for words below f_min,
// l for nodes that reach nothing.
void write_measurement_dump(std::ostream& out, const AdjacencyNetwork& net,
                            const NodeMeasurements& nodes,
                            std::span<const WordIntermittency> words);

}  // namespace textnet

#endif  // TEXTNET_MEASURES_HPP_
