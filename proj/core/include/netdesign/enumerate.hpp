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

#ifndef NETDESIGN_ENUMERATE_HPP_
#define NETDESIGN_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netdesign/design.hpp"

namespace netdesign {

// Walks designs on n positions and m levels in lexicographic order. With
// label symmetry only first-occurrence canonical designs are produced, so
// position 0 is always level 0. An optional fixed prefix restricts the walk
// to designs starting with it (the prefix itself must be valid).
class DesignEnumerator {
 public:
  DesignEnumerator(std::size_t n, int treatments, bool label_symmetry,
                   std::vector<Level> prefix = {});

  const Design& current() const { return current_; }
  // Moves to the next design; false once the walk is exhausted.
  bool advance();

 private:
  Level limit(std::size_t pos) const;

  std::size_t n_;
  int treatments_;
  bool label_symmetry_;
  std::size_t fixed_;
  Design current_;
  // running_max_[i] = max level over positions < i, or -1.
  std::vector<int> running_max_;
};

// All designs in order; for tests and small spaces.
std::vector<Design> enumerate_designs(std::size_t n, int treatments,
                                      bool label_symmetry);

// Number of designs the enumerator visits, saturating at UINT64_MAX.
std::uint64_t design_space_size(std::size_t n, int treatments,
                                bool label_symmetry);

}  // namespace netdesign

#endif  // NETDESIGN_ENUMERATE_HPP_
