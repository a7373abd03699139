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

#ifndef NETDESIGN_EDGE_LIST_HPP_
#define NETDESIGN_EDGE_LIST_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "netdesign/network.hpp"

namespace netdesign {

// Parses a bare edge list: comma- and/or whitespace-separated tokens `i-j`
// (undirected) or `i->j` (directed), node ids 1-based. `i->j` is rejected
// when `directed` is false. In a directed network `i-j` stands for both arcs.
// Every node is a design node; ids never mentioned become isolated nodes.
Network parse_edge_list(std::string_view text, std::size_t num_nodes,
                        bool directed);

// Values a caller may supply for a file without a header line, or to
// cross-check one that has it.
struct NetworkFileOptions {
  std::optional<std::size_t> num_nodes;
  std::optional<bool> directed;
};

// Parses the full network file format:
//
//   # comment
//   n=<count> directed=<0|1>
//   1-5, 2-5, 3-6, ...
//   B5: class=1 fixed=3 units=1,2
//   exchangeable: 1,2
//
// The header is optional when `options` provides both values. Lines of the
// form `B<id>: class=<c> fixed=<t> units=<ids>` turn node <id> into a block
// node; `units` must list exactly the design nodes linked to it.
Network parse_network(std::string_view text,
                      const NetworkFileOptions& options = {});

// Reads and parses a network file. Throws Error when the file is unreadable.
Network load_network(const std::filesystem::path& path,
                     const NetworkFileOptions& options = {});

// Edge tokens in entry order, comma separated: "1-7, 2-7, 3-6".
std::string format_edge_list(const Network& net);

// Full file text accepted by parse_network.
std::string format_network(const Network& net);

}  // namespace netdesign

#endif  // NETDESIGN_EDGE_LIST_HPP_
