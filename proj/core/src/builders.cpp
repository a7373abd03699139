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

#include "netdesign/builders.hpp"

#include <map>
#include <string>
#include <vector>

#include "netdesign/error.hpp"

namespace netdesign {
namespace {

void RequireTreatments(int treatments) {
  if (treatments < 2) {
    throw InvalidArgument("need at least 2 treatments, got " +
                          std::to_string(treatments));
  }
}

}  // namespace

Network augment_blocks(std::span<const int> units_per_block, int treatments) {
  RequireTreatments(treatments);
  if (units_per_block.empty()) throw InvalidArgument("empty block list");
  int units = 0;
  for (int s : units_per_block) {
    if (s < 1) throw InvalidArgument("block size must be at least 1");
    units += s;
  }
  const int blocks = static_cast<int>(units_per_block.size());
  std::vector<NodeRole> roles(static_cast<std::size_t>(units + blocks));
  std::vector<Edge> edges;
  std::map<int, int> class_of_size;
  int offset = 0;
  for (int b = 0; b < blocks; ++b) {
    const int size = units_per_block[static_cast<std::size_t>(b)];
    const auto [it, inserted] = class_of_size.emplace(
        size, static_cast<int>(class_of_size.size()) + 1);
    const NodeId block = units + b;
    roles[static_cast<std::size_t>(block)] =
        NodeRole::Block(it->second, treatments + b + 1);
    for (int u = 0; u < size; ++u) edges.push_back({offset + u, block, false});
    offset += size;
  }
  const std::size_t n = roles.size();
  return Network(n, false, std::move(edges), std::move(roles));
}

Network augment_row_column(int rows, int cols, int treatments) {
  RequireTreatments(treatments);
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("row-column layout needs rows, cols >= 1");
  }
  const int units = rows * cols;
  std::vector<NodeRole> roles(static_cast<std::size_t>(units + rows + cols));
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    roles[static_cast<std::size_t>(units + r)] =
        NodeRole::Block(1, treatments + r + 1);
  }
  for (int c = 0; c < cols; ++c) {
    roles[static_cast<std::size_t>(units + rows + c)] =
        NodeRole::Block(2, treatments + rows + c + 1);
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const NodeId unit = r * cols + c;
      edges.push_back({unit, units + r, false});
      edges.push_back({unit, units + rows + c, false});
    }
  }
  std::vector<std::vector<int>> exchangeable;
  if (rows == cols) exchangeable.push_back({1, 2});
  const std::size_t n = roles.size();
  return Network(n, false, std::move(edges), std::move(roles),
                 std::move(exchangeable));
}

Network augment_crossover(int subjects, int periods, int treatments,
                          bool period_blocks) {
  RequireTreatments(treatments);
  if (subjects < 1) throw InvalidArgument("crossover needs subjects >= 1");
  if (periods < 2) throw InvalidArgument("crossover needs periods >= 2");
  const int units = subjects * periods;
  const int blocks = subjects + (period_blocks ? periods : 0);
  std::vector<NodeRole> roles(static_cast<std::size_t>(units + blocks));
  std::vector<Edge> edges;
  for (int s = 0; s < subjects; ++s) {
    const NodeId subject = units + s;
    roles[static_cast<std::size_t>(subject)] =
        NodeRole::Block(1, treatments + s + 1);
    for (int p = 0; p < periods; ++p) {
      edges.push_back({s * periods + p, subject, false});
    }
  }
  if (period_blocks) {
    for (int p = 0; p < periods; ++p) {
      const NodeId period = units + subjects + p;
      roles[static_cast<std::size_t>(period)] =
          NodeRole::Block(2, treatments + subjects + p + 1);
      for (int s = 0; s < subjects; ++s) {
        edges.push_back({s * periods + p, period, false});
      }
    }
  }
  for (int s = 0; s < subjects; ++s) {
    for (int p = 1; p < periods; ++p) {
      edges.push_back({s * periods + p, s * periods + p - 1, true});
    }
  }
  const std::size_t n = roles.size();
  return Network(n, true, std::move(edges), std::move(roles));
}

}  // namespace netdesign
