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

#ifndef TEXTNET_NETWORK_HPP_
#define TEXTNET_NETWORK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "textnet/sampling.hpp"

namespace textnet {

using NodeId = std::uint32_t;

// Undirected word-adjacency graph. Node ids follow first occurrence in the
// token sequence; neighbor lists are sorted by id. Immutable once built.
class AdjacencyNetwork {
 public:
  struct Edge {
    NodeId u;  // u < v
    NodeId v;
    std::uint32_t weight;
  };

  AdjacencyNetwork() = default;

  // Links every pair of consecutive distinct tokens. Weight counts the
  // adjacent occurrences of the pair in either order.
  static AdjacencyNetwork from_tokens(std::span<const std::string> tokens);

  // Nodes are named "0".."n-1". Self-loops are dropped, repeated pairs
  // aggregate into the weight. Throws Error on an out-of-range id.
  static AdjacencyNetwork from_edges(
      std::size_t node_count,
      std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return words_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  std::span<const NodeId> neighbors(NodeId v) const {
    check(v);
    return adjacency_[v];
  }
  bool has_edge(NodeId u, NodeId v) const;
  std::uint32_t weight(NodeId u, NodeId v) const;

  const std::string& word(NodeId v) const {
    check(v);
    return words_[v];
  }
  std::optional<NodeId> find(std::string_view word) const;

  std::vector<Edge> edges() const;

  // `word_u<TAB>word_v<TAB>weight` per edge, ordered by (u, v).
  void write_edge_list(std::ostream& out) const;
  // `id<TAB>word` per node.
  void write_nodes(std::ostream& out) const;

 private:
  void check(NodeId v) const;
  static AdjacencyNetwork assemble(std::vector<std::string> words,
                                   std::vector<std::pair<NodeId, NodeId>> pairs);

  std::vector<std::string> words_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::vector<std::uint32_t>> weights_;
  std::size_t edge_count_ = 0;
};

// Throws Error for subtexts with fewer than two tokens.
AdjacencyNetwork build_network(const Subtext& subtext);

}  // namespace textnet

#endif  // TEXTNET_NETWORK_HPP_
