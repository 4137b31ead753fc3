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

#include "textnet/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

#include "textnet/common.hpp"
#include "textnet/csv.hpp"

namespace textnet {
namespace {

constexpr int kMaxSteps = 3;

// Sparse probability accumulator reused across walk sources.
class EndpointMass {
 public:
  explicit EndpointMass(std::size_t n) : mass_(n, 0.0) {}

  void add(NodeId v, double p) {
    if (mass_[v] == 0.0) touched_.push_back(v);
    mass_[v] += p;
  }

  std::vector<std::pair<NodeId, double>> take() {
    std::vector<std::pair<NodeId, double>> out;
    out.reserve(touched_.size());
    for (NodeId v : touched_) {
      out.emplace_back(v, mass_[v]);
      mass_[v] = 0.0;
    }
    touched_.clear();
    return out;
  }

  double take_entropy() {
    double h = 0.0;
    for (NodeId v : touched_) {
      const double p = mass_[v];
      if (p > 0.0) h -= p * std::log(p);
      mass_[v] = 0.0;
    }
    touched_.clear();
    return h;
  }

 private:
  std::vector<double> mass_;
  std::vector<NodeId> touched_;
};

void walk(const AdjacencyNetwork& net, std::array<NodeId, kMaxSteps + 1>& path,
          int depth, int steps, double p, EndpointMass& mass) {
  const NodeId here = path[depth];
  if (depth == steps) {
    mass.add(here, p);
    return;
  }
  const auto visited = [&](NodeId u) {
    for (int k = 0; k < depth; ++k) {
      if (path[k] == u) return true;
    }
    return false;
  };
  const auto nbrs = net.neighbors(here);
  std::size_t open = 0;
  for (NodeId u : nbrs) open += visited(u) ? 0 : 1;
  if (open == 0) {
    mass.add(here, p);  // absorbed for the remaining steps
    return;
  }
  const double q = p / static_cast<double>(open);
  for (NodeId u : nbrs) {
    if (visited(u)) continue;
    path[depth + 1] = u;
    walk(net, path, depth + 1, steps, q, mass);
  }
}

void check_steps(int h) {
  if (h != 2 && h != 3) {
    throw Error("accessibility: h must be 2 or 3, got " + std::to_string(h));
  }
}

double walk_entropy(const AdjacencyNetwork& net, NodeId v, int h,
                    EndpointMass& mass) {
  std::array<NodeId, kMaxSteps + 1> path{};
  path[0] = v;
  walk(net, path, 0, h, 1.0, mass);
  return mass.take_entropy();
}

}  // namespace

std::vector<std::pair<NodeId, double>> self_avoiding_walk_distribution(
    const AdjacencyNetwork& net, NodeId source, int steps) {
  if (steps < 0 || steps > kMaxSteps) {
    throw Error("self_avoiding_walk_distribution: steps must be in [0, 3]");
  }
  net.neighbors(source);  // validates the id
  EndpointMass mass(net.node_count());
  std::array<NodeId, kMaxSteps + 1> path{};
  path[0] = source;
  walk(net, path, 0, steps, 1.0, mass);
  return mass.take();
}

double accessibility(const AdjacencyNetwork& net, NodeId v, int h) {
  check_steps(h);
  net.neighbors(v);
  EndpointMass mass(net.node_count());
  return std::exp(walk_entropy(net, v, h, mass));
}

std::vector<double> accessibility_all(const AdjacencyNetwork& net, int h) {
  check_steps(h);
  EndpointMass mass(net.node_count());
  std::vector<double> out(net.node_count());
  for (NodeId v = 0; v < net.node_count(); ++v) {
    out[v] = std::exp(walk_entropy(net, v, h, mass));
  }
  return out;
}

double avg_neighbor_degree(const AdjacencyNetwork& net, NodeId v) {
  const auto nbrs = net.neighbors(v);
  if (nbrs.empty()) return 0.0;
  std::size_t total = 0;
  for (NodeId u : nbrs) total += net.degree(u);
  return static_cast<double>(total) / static_cast<double>(nbrs.size());
}

double clustering(const AdjacencyNetwork& net, NodeId v) {
  const auto nbrs = net.neighbors(v);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto adj = net.neighbors(nbrs[i]);
    // count neighbors of nbrs[i] in nbrs with a larger id (sorted merge)
    auto a = adj.begin();
    auto b = nbrs.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    while (a != adj.end() && b != nbrs.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return static_cast<double>(links) /
         (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
}

ShortestPaths bfs_shortest_paths(const AdjacencyNetwork& net, NodeId source) {
  net.neighbors(source);
  const std::size_t n = net.node_count();
  ShortestPaths sp{std::vector<int>(n, -1), std::vector<double>(n, 0.0)};
  std::vector<NodeId> queue;
  queue.reserve(n);
  queue.push_back(source);
  sp.distance[source] = 0;
  sp.count[source] = 1.0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : net.neighbors(v)) {
      if (sp.distance[w] < 0) {
        sp.distance[w] = sp.distance[v] + 1;
        queue.push_back(w);
      }
      if (sp.distance[w] == sp.distance[v] + 1) sp.count[w] += sp.count[v];
    }
  }
  return sp;
}

namespace {

// One Brandes pass per source; also records the mean distance from each
// source so betweenness and path lengths cost a single BFS sweep.
void brandes(const AdjacencyNetwork& net, std::vector<double>& centrality,
             std::vector<std::optional<double>>& path_length) {
  const std::size_t n = net.node_count();
  centrality.assign(n, 0.0);
  path_length.assign(n, std::nullopt);
  std::vector<int> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    long long distance_sum = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : net.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          distance_sum += dist[w];
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    if (order.size() > 1) {
      path_length[s] = static_cast<double>(distance_sum) /
                       static_cast<double>(order.size() - 1);
    }
    for (NodeId v : order) delta[v] = 0.0;
    // predecessors of w are the neighbors one level closer to s
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : net.neighbors(w)) {
        if (dist[v] == dist[w] - 1) {
          delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
      }
      if (w != s) centrality[w] += delta[w];
    }
  }
  for (double& c : centrality) c /= 2.0;  // each unordered pair seen twice
}

}  // namespace

std::vector<double> betweenness(const AdjacencyNetwork& net) {
  std::vector<double> centrality;
  std::vector<std::optional<double>> lengths;
  brandes(net, centrality, lengths);
  return centrality;
}

std::vector<std::optional<double>> shortest_path_stats(
    const AdjacencyNetwork& net) {
  std::vector<double> centrality;
  std::vector<std::optional<double>> lengths;
  brandes(net, centrality, lengths);
  return lengths;
}

NodeMeasurements measure_nodes(const AdjacencyNetwork& net) {
  NodeMeasurements m;
  const std::size_t n = net.node_count();
  m.alpha2 = accessibility_all(net, 2);
  m.alpha3 = accessibility_all(net, 3);
  m.neighbor_degree.resize(n);
  m.clustering.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    m.neighbor_degree[v] = avg_neighbor_degree(net, v);
    m.clustering[v] = clustering(net, v);
    if (net.degree(v) == 0) ++m.isolated_nodes;
  }
  brandes(net, m.betweenness, m.path_length);
  return m;
}

std::optional<WordIntermittency> intermittency_from_positions(
    std::span<const std::size_t> positions, std::size_t length,
    RecurrenceConvention convention) {
  if (positions.empty()) return std::nullopt;
  const long long shift = convention == RecurrenceConvention::kGap ? 1 : 0;
  WordIntermittency wi;
  wi.occurrences = positions.size();
  wi.recurrence.reserve(positions.size());
  for (std::size_t k = 0; k + 1 < positions.size(); ++k) {
    if (positions[k + 1] <= positions[k]) {
      throw Error("intermittency: positions must be strictly increasing");
    }
    wi.recurrence.push_back(static_cast<long long>(positions[k + 1] - positions[k]) - shift);
  }
  if (positions.front() < 1 || positions.back() > length) {
    throw Error("intermittency: positions must lie in [1, length]");
  }
  const long long t_initial = static_cast<long long>(positions.front()) - shift;
  const long long t_final =
      static_cast<long long>(length) + 1 - static_cast<long long>(positions.back()) - shift;
  wi.recurrence.push_back(t_initial + t_final);

  // <t^2>/<t>^2 - 1 = (n*S2 - S1^2) / S1^2, evaluated exactly in integers.
  __int128 s1 = 0;
  __int128 s2 = 0;
  for (long long t : wi.recurrence) {
    s1 += t;
    s2 += static_cast<__int128>(t) * t;
  }
  if (s1 == 0) return std::nullopt;
  const __int128 n = static_cast<__int128>(wi.recurrence.size());
  const __int128 numerator = n * s2 - s1 * s1;
  wi.value = std::sqrt(static_cast<double>(numerator)) / static_cast<double>(s1);
  return wi;
}

std::optional<WordIntermittency> intermittency(
    std::span<const std::string> stream, std::string_view word,
    std::size_t f_min, RecurrenceConvention convention) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (stream[i] == word) positions.push_back(i + 1);
  }
  if (positions.size() < std::max<std::size_t>(f_min, 1)) return std::nullopt;
  auto wi = intermittency_from_positions(positions, stream.size(), convention);
  if (wi) wi->word = std::string(word);
  return wi;
}

std::vector<WordIntermittency> intermittency_all(
    std::span<const std::string> stream, std::size_t f_min,
    RecurrenceConvention convention) {
  std::unordered_map<std::string_view, std::size_t> slot;
  std::vector<std::string_view> words;
  std::vector<std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    auto [it, inserted] = slot.emplace(stream[i], words.size());
    if (inserted) {
      words.push_back(stream[i]);
      positions.emplace_back();
    }
    positions[it->second].push_back(i + 1);
  }
  std::vector<WordIntermittency> out;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (positions[k].size() < std::max<std::size_t>(f_min, 1)) continue;
    auto wi = intermittency_from_positions(positions[k], stream.size(), convention);
    if (!wi) continue;
    wi->word = std::string(words[k]);
    out.push_back(std::move(*wi));
  }
  return out;
}

void write_measurement_dump(std::ostream& out, const AdjacencyNetwork& net,
                            const NodeMeasurements& nodes,
                            std::span<const WordIntermittency> words) {
  std::unordered_map<std::string_view, double> word_value;
  for (const auto& w : words) word_value.emplace(w.word, w.value);
  csv::write_row(out, {"word", "alpha2", "alpha3", "kn", "B", "C", "l", "I"});
  for (NodeId v = 0; v < net.node_count(); ++v) {
    const auto it = word_value.find(net.word(v));
    csv::write_row(
        out, {net.word(v), format_double(nodes.alpha2[v]),
              format_double(nodes.alpha3[v]),
              format_double(nodes.neighbor_degree[v]),
              format_double(nodes.betweenness[v]),
              format_double(nodes.clustering[v]),
              nodes.path_length[v] ? format_double(*nodes.path_length[v]) : "",
              it != word_value.end() ? format_double(it->second) : ""});
  }
}

}  // namespace textnet
