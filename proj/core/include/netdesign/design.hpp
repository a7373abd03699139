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

#ifndef NETDESIGN_DESIGN_HPP_
#define NETDESIGN_DESIGN_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace netdesign {

// Treatment level, 0-based (level 0 is treatment 1).
using Level = std::uint8_t;

// Largest number of free treatments a Design can hold.
inline constexpr int kMaxTreatments = 64;

// Assignment of one treatment to every design node, indexed by position in
// Network::design_nodes(). Block nodes are implicit. Designs order
// lexicographically by position.
struct Design {
  std::vector<Level> levels;

  Design() = default;
  explicit Design(std::vector<Level> l) : levels(std::move(l)) {}
  // From 1-based treatment numbers.
  static Design FromTreatments(std::span<const int> treatments);

  std::size_t size() const { return levels.size(); }
  Level operator[](std::size_t i) const { return levels[i]; }
  Level& operator[](std::size_t i) { return levels[i]; }

  // 1-based treatment numbers.
  std::vector<int> treatments() const;

  friend auto operator<=>(const Design&, const Design&) = default;
  friend bool operator==(const Design&, const Design&) = default;
};

// "1 2 2 1"; with `letters` and at most 26 levels, "ABBA".
std::string to_string(const Design& x, bool letters = false);

// Throws InvalidArgument unless x has `design_nodes` entries, each below m.
void validate_design(const Design& x, std::size_t design_nodes,
                     int treatments);

// First-occurrence label form: the first occurrence of label j precedes the
// first occurrence of label j+1, so position 0 always carries level 0.
bool is_label_canonical(const Design& x);
Design label_canonical(const Design& x);

}  // namespace netdesign

#endif  // NETDESIGN_DESIGN_HPP_
