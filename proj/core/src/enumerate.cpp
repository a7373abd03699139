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

#include "netdesign/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "netdesign/error.hpp"

namespace netdesign {

DesignEnumerator::DesignEnumerator(std::size_t n, int treatments,
                                   bool label_symmetry,
                                   std::vector<Level> prefix)
    : n_(n),
      treatments_(treatments),
      label_symmetry_(label_symmetry),
      fixed_(prefix.size()),
      running_max_(n + 1, -1) {
  if (treatments < 1 || treatments > kMaxTreatments) {
    throw InvalidArgument("treatment count out of range");
  }
  if (prefix.size() > n) throw InvalidArgument("prefix longer than design");
  current_.levels = std::move(prefix);
  current_.levels.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < fixed_ && current_[i] > limit(i)) {
      throw InvalidArgument("prefix is not a valid design prefix");
    }
    running_max_[i + 1] = std::max(running_max_[i], int{current_[i]});
  }
}

Level DesignEnumerator::limit(std::size_t pos) const {
  const int top = treatments_ - 1;
  if (!label_symmetry_) return static_cast<Level>(top);
  return static_cast<Level>(std::min(top, running_max_[pos] + 1));
}

bool DesignEnumerator::advance() {
  for (std::size_t i = n_; i-- > fixed_;) {
    if (current_[i] < limit(i)) {
      ++current_[i];
      running_max_[i + 1] = std::max(running_max_[i], int{current_[i]});
      for (std::size_t j = i + 1; j < n_; ++j) {
        current_[j] = 0;
        running_max_[j + 1] = std::max(running_max_[j], 0);
      }
      return true;
    }
  }
  return false;
}

std::vector<Design> enumerate_designs(std::size_t n, int treatments,
                                      bool label_symmetry) {
  std::vector<Design> out;
  DesignEnumerator it(n, treatments, label_symmetry);
  do {
    out.push_back(it.current());
  } while (it.advance());
  return out;
}

std::uint64_t design_space_size(std::size_t n, int treatments,
                                bool label_symmetry) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const auto mul = [](std::uint64_t a, std::uint64_t b) {
    return (b != 0 && a > kMax / b) ? kMax : a * b;
  };
  const auto add = [](std::uint64_t a, std::uint64_t b) {
    return a > kMax - b ? kMax : a + b;
  };
  const auto m = static_cast<std::size_t>(treatments);
  if (!label_symmetry) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total = mul(total, m);
    return total;
  }
  if (n == 0) return 1;
  // ways[k]: prefixes whose labels so far are exactly 0..k-1.
  std::vector<std::uint64_t> ways(m + 1, 0);
  ways[1] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next(m + 1, 0);
    for (std::size_t k = 1; k <= m; ++k) {
      if (ways[k] == 0) continue;
      next[k] = add(next[k], mul(ways[k], k));
      if (k < m) next[k + 1] = add(next[k + 1], ways[k]);
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : ways) total = add(total, w);
  return total;
}

}  // namespace netdesign
