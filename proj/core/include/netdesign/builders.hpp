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

#ifndef NETDESIGN_BUILDERS_HPP_
#define NETDESIGN_BUILDERS_HPP_

#include <span>

#include "netdesign/network.hpp"

namespace netdesign {

// Classical blocked layouts rewritten as networks. Units come first
// (0-based ids 0..units-1) and block nodes follow; each block node carries
// one fixed pseudo-treatment m+1, m+2, ... in block-node order, so its
// network effect plays the part of a block effect.

// One-way blocks. Unit u of block b sits at offset(b)+u. Blocks of equal
// size share a role class; classes are numbered by first appearance.
// Throws InvalidArgument for an empty list, a zero size, or m < 2.
Network augment_blocks(std::span<const int> units_per_block, int treatments);

// rows x cols grid, unit (r, c) at r*cols + c, row nodes then column nodes.
// Row nodes form class 1 and column nodes class 2; for a square grid the two
// classes are exchangeable so the transpose is an automorphism.
Network augment_row_column(int rows, int cols, int treatments);

// Crossover trial. Unit (s, p) at s*periods + p. Subject nodes (class 1)
// link to their units; with `period_blocks`, period nodes (class 2) link to
// theirs. Carryover arcs (s,p) -> (s,p-1) put the previous period's
// treatment into each later response.
Network augment_crossover(int subjects, int periods, int treatments,
                          bool period_blocks);

}  // namespace netdesign

#endif  // NETDESIGN_BUILDERS_HPP_
