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

#ifndef NETDESIGN_SRC_SEARCH_INTERNAL_HPP_
#define NETDESIGN_SRC_SEARCH_INTERNAL_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "netdesign/automorph.hpp"
#include "netdesign/design.hpp"
#include "netdesign/lnem.hpp"

namespace netdesign::internal {

// Maps a design to the member of its orbit that stands for the orbit:
// the lexicographic minimum over automorphisms and, optionally, relabellings.
class OrbitKeyer {
 public:
  OrbitKeyer(const AutomorphismGroup* group, bool label_symmetry)
      : group_(group), label_symmetry_(label_symmetry) {}

  Design operator()(const Design& x) const {
    if (group_ != nullptr) return orbit_representative(x, *group_, label_symmetry_);
    return label_symmetry_ ? label_canonical(x) : x;
  }

 private:
  const AutomorphismGroup* group_;
  bool label_symmetry_;
};

// Thread-safe memo of criterion values keyed by orbit representative.
class EvaluationCache {
 public:
  struct Lookup {
    Design key;
    std::optional<double> value;
    bool fresh = false;  // this call inserted the entry
  };

  explicit EvaluationCache(OrbitKeyer keyer) : keyer_(keyer) {}

  Lookup Get(const Design& x, CriterionEvaluator& evaluate);

  // Distinct representatives with a valid / INVALID value.
  std::uint64_t valid_entries() const;
  std::uint64_t invalid_entries() const;

 private:
  OrbitKeyer keyer_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::optional<double>> values_;
};

// Uniform design drawn from the generator for (seed, stream).
Design RandomDesign(std::size_t n, int treatments, std::uint64_t seed,
                    std::uint64_t stream);

unsigned ResolveWorkers(unsigned requested);

// Runs task(index, worker) for index in [0, count) on `workers` threads.
// The first exception thrown by a task is rethrown after all threads join.
void ParallelFor(std::size_t count, unsigned workers,
                 const std::function<void(std::size_t, unsigned)>& task);

double SecondsSince(std::uint64_t start_ns);
std::uint64_t NowNs();

}  // namespace netdesign::internal

#endif  // NETDESIGN_SRC_SEARCH_INTERNAL_HPP_
