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

#include "textnet/network.hpp"

#include <algorithm>

#include "textnet/common.hpp"

namespace textnet {

void AdjacencyNetwork::check(NodeId v) const {
  if (v >= words_.size()) {
    throw Error("unknown node id " + std::to_string(v) + " (network has " +
                std::to_string(words_.size()) + " nodes)");
  }
}

AdjacencyNetwork AdjacencyNetwork::assemble(
    std::vector<std::string> words,
    std::vector<std::pair<NodeId, NodeId>> pairs) {
  AdjacencyNetwork net;
  net.words_ = std::move(words);
  net.index_.reserve(net.words_.size());
  for (NodeId i = 0; i < net.words_.size(); ++i) net.index_.emplace(net.words_[i], i);

  for (auto& [u, v] : pairs) {
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());

  const std::size_t n = net.words_.size();
  net.adjacency_.assign(n, {});
  net.weights_.assign(n, {});
  // Sorted (u, v) pairs with u < v visit each node's lower neighbors
  // before its higher ones, both in increasing order, so every list comes
  // out sorted.
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    const auto [u, v] = pairs[i];
    const auto w = static_cast<std::uint32_t>(j - i);
    net.adjacency_[u].push_back(v);
    net.weights_[u].push_back(w);
    net.adjacency_[v].push_back(u);
    net.weights_[v].push_back(w);
    ++net.edge_count_;
    i = j;
  }
  return net;
}

AdjacencyNetwork AdjacencyNetwork::from_tokens(
    std::span<const std::string> tokens) {
  std::vector<std::string> words;
  std::unordered_map<std::string_view, NodeId> ids;
  std::vector<NodeId> sequence;
  sequence.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, inserted] = ids.emplace(t, static_cast<NodeId>(words.size()));
    if (inserted) words.push_back(t);
    sequence.push_back(it->second);
  }
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(sequence.size());
  for (std::size_t k = 0; k + 1 < sequence.size(); ++k) {
    if (sequence[k] != sequence[k + 1]) {
      pairs.emplace_back(sequence[k], sequence[k + 1]);
    }
  }
  return assemble(std::move(words), std::move(pairs));
}

AdjacencyNetwork AdjacencyNetwork::from_edges(
    std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::string> words;
  words.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) words.push_back(std::to_string(i));
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw Error("from_edges: node id out of range");
    }
    if (u != v) pairs.emplace_back(u, v);
  }
  return assemble(std::move(words), std::move(pairs));
}

bool AdjacencyNetwork::has_edge(NodeId u, NodeId v) const {
  const auto adj = neighbors(u);
  check(v);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::uint32_t AdjacencyNetwork::weight(NodeId u, NodeId v) const {
  const auto adj = neighbors(u);
  check(v);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return 0;
  return weights_[u][static_cast<std::size_t>(it - adj.begin())];
}

std::optional<NodeId> AdjacencyNetwork::find(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<AdjacencyNetwork::Edge> AdjacencyNetwork::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t k = 0; k < adjacency_[u].size(); ++k) {
      const NodeId v = adjacency_[u][k];
      if (u < v) out.push_back(Edge{u, v, weights_[u][k]});
    }
  }
  return out;
}

void AdjacencyNetwork::write_edge_list(std::ostream& out) const {
  for (const auto& e : edges()) {
    out << words_[e.u] << '\t' << words_[e.v] << '\t' << e.weight << '\n';
  }
}

void AdjacencyNetwork::write_nodes(std::ostream& out) const {
  for (NodeId v = 0; v < words_.size(); ++v) out << v << '\t' << words_[v] << '\n';
}

AdjacencyNetwork build_network(const Subtext& subtext) {
  if (subtext.tokens.size() < 2) {
    throw Error("build_network: subtext " + subtext.book_id + "#" +
                std::to_string(subtext.index) + " has fewer than 2 tokens");
  }
  return AdjacencyNetwork::from_tokens(subtext.tokens);
}

}  // namespace textnet
