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

#ifndef NETDESIGN_NETWORK_HPP_
#define NETDESIGN_NETWORK_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace netdesign {

// Internal node index, 0-based. File formats use 1-based ids.
using NodeId = int;

enum class NodeKind : std::uint8_t { kDesign, kBlock };

// What a node stands for in the experiment. Design nodes are experimental
// units that receive one of the m free treatments and are measured. Block
// nodes carry a blocking factor as a fixed pseudo-treatment and are never
// measured.
struct NodeRole {
  NodeKind kind = NodeKind::kDesign;
  // Role class shared by exchangeable block nodes. Unused for design nodes.
  int class_id = 0;
  // 1-based treatment index permanently carried by a block node.
  int fixed_treatment = 0;

  static NodeRole Design() { return {}; }
  static NodeRole Block(int class_id, int fixed_treatment) {
    return {NodeKind::kBlock, class_id, fixed_treatment};
  }
  bool is_block() const { return kind == NodeKind::kBlock; }

  friend bool operator==(const NodeRole&, const NodeRole&) = default;
};

// One entry of an edge list. An undirected entry sets A[from][to] and
// A[to][from]; a directed entry sets only A[from][to], meaning the response
// of `from` includes the network effect of the treatment on `to`.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  bool directed = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable experiment network: nodes, edge list, 0/1 adjacency matrix and
// node roles. The constructor validates every structural invariant and
// throws InvalidArgument on violation.
class Network {
 public:
  // `roles` defaults to all design nodes. `exchangeable_classes` groups block
  // role classes whose nodes may be mapped onto one another by automorphisms
  // (a square row-column layout admits the transpose, for instance).
  Network(std::size_t num_nodes, bool directed, std::vector<Edge> edges,
          std::vector<NodeRole> roles = {},
          std::vector<std::vector<int>> exchangeable_classes = {});

  std::size_t num_nodes() const { return n_; }
  bool directed() const { return directed_; }

  // A[i][k].
  bool adjacent(NodeId i, NodeId k) const {
    return adjacency_[static_cast<std::size_t>(i) * n_ +
                      static_cast<std::size_t>(k)] != 0;
  }
  // Nodes k with A[i][k] = 1: whose treatments reach i's response.
  std::span<const NodeId> influencers(NodeId i) const;
  // Nodes i with A[i][k] = 1: whose responses the treatment on k reaches.
  std::span<const NodeId> influenced(NodeId k) const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  const NodeRole& role(NodeId i) const {
    return roles_[static_cast<std::size_t>(i)];
  }
  bool measurable(NodeId i) const { return !role(i).is_block(); }

  // Design nodes in ascending index order. Designs are indexed by position
  // in this list.
  std::span<const NodeId> design_nodes() const { return design_nodes_; }
  std::span<const NodeId> block_nodes() const { return block_nodes_; }
  std::size_t num_design_nodes() const { return design_nodes_.size(); }
  // Position of a design node inside design_nodes(), or -1 for block nodes.
  int design_position(NodeId i) const {
    return design_position_[static_cast<std::size_t>(i)];
  }

  const std::vector<std::vector<int>>& exchangeable_classes() const {
    return exchangeable_;
  }
  // Colour used to enforce role preservation: 0 for design nodes, and one
  // shared positive value per group of exchangeable block classes.
  int symmetry_colour(NodeId i) const {
    return symmetry_colour_[static_cast<std::size_t>(i)];
  }

  // Dense row-major copy of A as 0/1 integers.
  std::vector<int> adjacency_matrix() const;

 private:
  std::size_t n_;
  bool directed_;
  std::vector<Edge> edges_;
  std::vector<NodeRole> roles_;
  std::vector<std::vector<int>> exchangeable_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::size_t> row_offsets_;
  std::vector<NodeId> row_list_;
  std::vector<std::size_t> col_offsets_;
  std::vector<NodeId> col_list_;
  std::vector<NodeId> design_nodes_;
  std::vector<NodeId> block_nodes_;
  std::vector<int> design_position_;
  std::vector<int> symmetry_colour_;
};

}  // namespace netdesign

#endif  // NETDESIGN_NETWORK_HPP_
