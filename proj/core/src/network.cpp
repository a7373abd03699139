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

#include "netdesign/network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "netdesign/error.hpp"

namespace netdesign {

ParseError::ParseError(const std::string& message, std::string token,
                       std::size_t line, std::size_t column)
    : Error(message + " at line " + std::to_string(line) + ", column " +
            std::to_string(column) + " (token '" + token + "')"),
      token_(std::move(token)),
      line_(line),
      column_(column) {}

GroupTooLarge::GroupTooLarge(std::size_t cap)
    : Error("automorphism group exceeds the cap of " + std::to_string(cap) +
            " elements"),
      cap_(cap) {}

namespace {

std::string Describe(const Edge& e) {
  return std::to_string(e.from + 1) + (e.directed ? "->" : "-") +
         std::to_string(e.to + 1);
}

}  // namespace

Network::Network(std::size_t num_nodes, bool directed, std::vector<Edge> edges,
                 std::vector<NodeRole> roles,
                 std::vector<std::vector<int>> exchangeable_classes)
    : n_(num_nodes),
      directed_(directed),
      edges_(std::move(edges)),
      roles_(std::move(roles)),
      exchangeable_(std::move(exchangeable_classes)) {
  if (roles_.empty()) roles_.assign(n_, NodeRole::Design());
  if (roles_.size() != n_) {
    throw InvalidArgument("role list has " + std::to_string(roles_.size()) +
                          " entries for " + std::to_string(n_) + " nodes");
  }

  adjacency_.assign(n_ * n_, 0);
  // Pairs already claimed by an entry: undirected entries claim both
  // directions, directed entries only their own.
  std::set<std::pair<NodeId, NodeId>> claimed;
  const auto claim = [&](NodeId a, NodeId b, const Edge& e) {
    if (!claimed.emplace(a, b).second) {
      throw InvalidArgument("duplicate edge " + Describe(e));
    }
    adjacency_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)] =
        1;
  };
  for (const Edge& e : edges_) {
    const auto n = static_cast<NodeId>(n_);
    if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n) {
      throw InvalidArgument("edge " + Describe(e) + " references a node outside 1.." +
                            std::to_string(n_));
    }
    if (e.from == e.to) throw InvalidArgument("self-loop " + Describe(e));
    if (e.directed && !directed_) {
      throw InvalidArgument("directed edge " + Describe(e) +
                            " in an undirected network");
    }
    claim(e.from, e.to, e);
    if (!e.directed) claim(e.to, e.from, e);
  }

  row_offsets_.assign(n_ + 1, 0);
  col_offsets_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (adjacency_[i * n_ + k] != 0) {
        row_list_.push_back(static_cast<NodeId>(k));
      }
    }
    row_offsets_[i + 1] = row_list_.size();
  }
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (adjacency_[i * n_ + k] != 0) {
        col_list_.push_back(static_cast<NodeId>(i));
      }
    }
    col_offsets_[k + 1] = col_list_.size();
  }

  design_position_.assign(n_, -1);
  std::set<int> fixed_seen;
  std::set<int> classes;
  for (std::size_t i = 0; i < n_; ++i) {
    const NodeRole& r = roles_[i];
    if (r.is_block()) {
      if (r.fixed_treatment < 1) {
        throw InvalidArgument("block node " + std::to_string(i + 1) +
                              " has no fixed treatment");
      }
      if (!fixed_seen.insert(r.fixed_treatment).second) {
        throw InvalidArgument("fixed treatment " +
                              std::to_string(r.fixed_treatment) +
                              " is carried by two block nodes");
      }
      if (r.class_id < 1) {
        throw InvalidArgument("block node " + std::to_string(i + 1) +
                              " needs a positive role class");
      }
      classes.insert(r.class_id);
      block_nodes_.push_back(static_cast<NodeId>(i));
    } else {
      design_position_[i] = static_cast<int>(design_nodes_.size());
      design_nodes_.push_back(static_cast<NodeId>(i));
    }
  }

  // Exchangeable groups: every class belongs to at most one group.
  std::map<int, int> group_of;
  for (std::size_t g = 0; g < exchangeable_.size(); ++g) {
    for (int c : exchangeable_[g]) {
      if (!classes.count(c)) {
        throw InvalidArgument("exchangeable class " + std::to_string(c) +
                              " has no block nodes");
      }
      if (!group_of.emplace(c, static_cast<int>(g)).second) {
        throw InvalidArgument("class " + std::to_string(c) +
                              " listed in two exchangeable groups");
      }
    }
  }
  // Colour of a class group is its smallest member, shifted past 0.
  symmetry_colour_.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!roles_[i].is_block()) continue;
    int c = roles_[i].class_id;
    if (auto it = group_of.find(c); it != group_of.end()) {
      const auto& members = exchangeable_[static_cast<std::size_t>(it->second)];
      c = *std::min_element(members.begin(), members.end());
    }
    symmetry_colour_[i] = c;
  }
}

std::span<const NodeId> Network::influencers(NodeId i) const {
  const auto u = static_cast<std::size_t>(i);
  return std::span<const NodeId>(row_list_).subspan(
      row_offsets_[u], row_offsets_[u + 1] - row_offsets_[u]);
}

std::span<const NodeId> Network::influenced(NodeId k) const {
  const auto u = static_cast<std::size_t>(k);
  return std::span<const NodeId>(col_list_).subspan(
      col_offsets_[u], col_offsets_[u + 1] - col_offsets_[u]);
}

std::vector<int> Network::adjacency_matrix() const {
  return std::vector<int>(adjacency_.begin(), adjacency_.end());
}

}  // namespace netdesign
