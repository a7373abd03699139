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

#ifndef NETDESIGN_SEARCH_HPP_
#define NETDESIGN_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "netdesign/automorph.hpp"
#include "netdesign/design.hpp"
#include "netdesign/lnem.hpp"
#include "netdesign/network.hpp"

namespace netdesign {

enum class Algorithm { kExhaustive, kCoordinateDescent };

// Criterion values closer than this relative gap are ties; the earlier
// design wins a tie.
inline constexpr double kTieTolerance = 1e-12;

// True when `candidate` beats `incumbent`: any valid value beats INVALID,
// and a valid value must be lower by more than the tie tolerance.
bool improves(std::optional<double> candidate,
              std::optional<double> incumbent);

struct SearchConfig {
  Algorithm algorithm = Algorithm::kExhaustive;
  bool use_automorphisms = true;
  bool use_label_symmetry = true;
  // Coordinate descent random starts.
  int restarts = 100;
  std::uint64_t seed = 0;
  // Count INVALID designs in num_eval as well as in num_invalid.
  bool count_invalid_as_eval = false;
  // Exhaustive search stops after this many candidates (partial report).
  std::optional<std::uint64_t> max_designs;
  // 0 means one worker per hardware thread.
  unsigned workers = 0;
  // Known optimum; when set, the report carries reference / best_value.
  std::optional<double> reference_value;
  // Explicit coordinate descent starts. When non-empty they replace the
  // random ones and `restarts` is ignored.
  std::vector<Design> start_designs;
  std::size_t automorphism_cap = kDefaultGroupCap;
};

struct SearchReport {
  Design best_design;
  // nullopt when no valid design was seen.
  std::optional<double> best_value;
  // Criterion evaluations of valid designs (plus invalid ones when
  // count_invalid_as_eval is set).
  std::uint64_t num_eval = 0;
  // Candidates generated, before pruning.
  std::uint64_t num_considered = 0;
  // Candidates not evaluated: non-canonical designs in exhaustive search,
  // repeats of an already evaluated orbit in coordinate descent.
  std::uint64_t num_skipped_noncanonical = 0;
  std::uint64_t num_invalid = 0;
  double wall_time = 0.0;
  std::uint64_t seed = 0;
  std::optional<double> efficiency;
  // Order of the group used for pruning; 1 when pruning is off.
  std::uint64_t group_size = 1;
  // Stopped by a budget before the search finished.
  bool partial = false;
};

// Lexicographic exhaustive search over the (label-reduced) design space,
// evaluating only designs that are canonical in their automorphism orbit.
// Work is split into fixed prefix units merged in enumeration order, so the
// report does not depend on the worker count. `group` may supply a
// precomputed automorphism group.
SearchReport exhaustive_search(const Network& net, const ModelSpec& spec,
                               const SearchConfig& config,
                               const AutomorphismGroup* group = nullptr);

// Cyclic coordinate descent from `restarts` seeded uniform random starts.
// With automorphisms, candidates map to their orbit representative and the
// representative keys an evaluation cache shared by all restarts.
SearchReport coordinate_descent(const Network& net, const ModelSpec& spec,
                                const SearchConfig& config,
                                const AutomorphismGroup* group = nullptr);

// Dispatches on config.algorithm.
SearchReport run_search(const Network& net, const ModelSpec& spec,
                        const SearchConfig& config,
                        const AutomorphismGroup* group = nullptr);

// ---------------------------------------------------------------------------
// Generic loop with pluggable `next` and `stop`.

struct SearchHistory {
  std::vector<Design> designs;
  // Criterion value per candidate; nullopt if skipped or INVALID.
  std::vector<std::optional<double>> values;
};

// Returns the next candidate, or nullopt when the stream is exhausted.
using NextFn = std::function<std::optional<Design>(const SearchHistory&)>;
// Decides whether to halt after the latest candidate was handled.
using StopFn = std::function<bool(const SearchHistory&, std::uint64_t)>;

enum class OrbitPolicy {
  // Non-canonical candidates are skipped and get no value.
  kSkipNonCanonical,
  // Candidates are mapped to their orbit representative, which keys an
  // evaluation cache; every candidate gets a value.
  kRepresentativeCache,
};

struct PluginOptions {
  OrbitPolicy policy = OrbitPolicy::kSkipNonCanonical;
  // Hard cap on candidates; reaching it marks the report partial.
  std::uint64_t safety_budget = 10'000'000;
};

SearchReport run_with_plugins(const Network& net, const ModelSpec& spec,
                              const NextFn& next, const StopFn& stop,
                              const SearchConfig& config,
                              const PluginOptions& options = {},
                              const AutomorphismGroup* group = nullptr);

// Successive designs of DesignEnumerator.
NextFn lexicographic_next(std::size_t n, int treatments, bool label_symmetry);
// Independent uniform designs from a seeded generator.
NextFn random_next(std::size_t n, int treatments, std::uint64_t seed);
// One coordinate descent run from `start`, reading the value of each
// proposal back from the history.
NextFn coordinate_descent_next(Design start, int treatments);

StopFn stop_at_design(Design last);
StopFn stop_after_evaluations(std::uint64_t budget);
StopFn never_stop();

}  // namespace netdesign

#endif  // NETDESIGN_SEARCH_HPP_
