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

#ifndef NETDESIGN_AUTOMORPH_HPP_
#define NETDESIGN_AUTOMORPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netdesign/design.hpp"
#include "netdesign/network.hpp"

namespace netdesign {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

// The full group of role- and direction-preserving automorphisms of a
// network, stored as an explicit element list sorted lexicographically by
// permutation image. Element 0 is the identity.
class AutomorphismGroup {
 public:
  // `elements` must be sorted, start with the identity and contain only
  // automorphisms of `net`; find_automorphisms is the usual producer.
  AutomorphismGroup(const Network& net, std::vector<NodeId> flat_elements);

  std::size_t size() const { return size_; }
  std::size_t num_nodes() const { return n_; }
  std::size_t num_design_nodes() const { return design_nodes_; }

  // Image vector of element k: node i maps to element(k)[i].
  std::span<const NodeId> element(std::size_t k) const {
    return std::span<const NodeId>(elements_).subspan(k * n_, n_);
  }
  // For element k, the design position whose level lands on each design
  // position: (pi . x)[d] = x[design_preimage(k)[d]].
  std::span<const std::uint16_t> design_preimage(std::size_t k) const {
    return std::span<const std::uint16_t>(preimage_).subspan(
        k * design_nodes_, design_nodes_);
  }

  // pi . x with (pi . x)[pi(i)] = x[i] over design nodes.
  Design apply(std::size_t k, const Design& x) const;

 private:
  std::size_t n_;
  std::size_t design_nodes_;
  std::size_t size_;
  std::vector<NodeId> elements_;
  std::vector<std::uint16_t> preimage_;
};

// Enumerates every automorphism by a VF2-style backtracking search over
// partial mappings, with node colours seeded by role and refined to an
// equitable partition. Throws GroupTooLarge past `cap` elements.
AutomorphismGroup find_automorphisms(const Network& net,
                                     std::size_t cap = kDefaultGroupCap);

// True iff no group element maps x to a lexicographically smaller design.
// Only design-node coordinates are compared, in ascending node order.
bool is_canonical(const Design& x, const AutomorphismGroup& group);

// Lexicographically smallest member of x's orbit. With `label_symmetry`
// the orbit also ranges over treatment relabellings.
Design orbit_representative(const Design& x, const AutomorphismGroup& group,
                            bool label_symmetry);

// Test oracle: partitions all m^N designs into orbits by applying every
// group element and counts them. Requires m^N <= 10^7.
std::uint64_t count_orbits_bruteforce(const AutomorphismGroup& group,
                                      int treatments);
std::uint64_t count_orbits_bruteforce(const Network& net, int treatments);

// 1-based cycle notation without fixed points, "()" for the identity.
std::string cycle_notation(std::span<const NodeId> perm);

}  // namespace netdesign

#endif  // NETDESIGN_AUTOMORPH_HPP_
