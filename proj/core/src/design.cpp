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

#include "netdesign/design.hpp"

#include <array>

#include "netdesign/error.hpp"

namespace netdesign {

Design Design::FromTreatments(std::span<const int> treatments) {
  Design x;
  x.levels.reserve(treatments.size());
  for (int t : treatments) {
    if (t < 1 || t > kMaxTreatments) {
      throw InvalidArgument("treatment " + std::to_string(t) +
                            " outside 1.." + std::to_string(kMaxTreatments));
    }
    x.levels.push_back(static_cast<Level>(t - 1));
  }
  return x;
}

std::vector<int> Design::treatments() const {
  std::vector<int> out(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) out[i] = levels[i] + 1;
  return out;
}

std::string to_string(const Design& x, bool letters) {
  std::string out;
  bool use_letters = letters;
  for (Level l : x.levels) use_letters = use_letters && l < 26;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (use_letters) {
      out.push_back(static_cast<char>('A' + x[i]));
    } else {
      if (i) out.push_back(' ');
      out += std::to_string(x[i] + 1);
    }
  }
  return out;
}

void validate_design(const Design& x, std::size_t design_nodes,
                     int treatments) {
  if (x.size() != design_nodes) {
    throw InvalidArgument("design has " + std::to_string(x.size()) +
                          " entries for " + std::to_string(design_nodes) +
                          " design nodes");
  }
  for (Level l : x.levels) {
    if (static_cast<int>(l) >= treatments) {
      throw InvalidArgument("design uses treatment " + std::to_string(l + 1) +
                            " but only " + std::to_string(treatments) +
                            " are available");
    }
  }
}

bool is_label_canonical(const Design& x) {
  int next = 0;
  for (Level l : x.levels) {
    if (l > next) return false;
    if (l == next) ++next;
  }
  return true;
}

Design label_canonical(const Design& x) {
  std::array<int, 256> relabel;
  relabel.fill(-1);
  int next = 0;
  Design out;
  out.levels.reserve(x.size());
  for (Level l : x.levels) {
    if (relabel[l] < 0) relabel[l] = next++;
    out.levels.push_back(static_cast<Level>(relabel[l]));
  }
  return out;
}

}  // namespace netdesign
