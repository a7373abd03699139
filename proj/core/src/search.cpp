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

#include "netdesign/search.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include "netdesign/enumerate.hpp"
#include "netdesign/error.hpp"
#include "search_internal.hpp"

namespace netdesign {

bool improves(std::optional<double> candidate,
              std::optional<double> incumbent) {
  if (!candidate) return false;
  if (!incumbent) return true;
  return *candidate < *incumbent - kTieTolerance * std::abs(*incumbent);
}

namespace internal {

EvaluationCache::Lookup EvaluationCache::Get(const Design& x,
                                             CriterionEvaluator& evaluate) {
  Lookup out;
  out.key = keyer_(x);
  const std::string key(out.key.levels.begin(), out.key.levels.end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = values_.find(key); it != values_.end()) {
      out.value = it->second;
      return out;
    }
  }
  out.value = evaluate(out.key);
  std::lock_guard<std::mutex> lock(mu_);
  out.fresh = values_.emplace(key, out.value).second;
  return out;
}

std::uint64_t EvaluationCache::valid_entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::uint64_t count = 0;
  for (const auto& [key, value] : values_) count += value.has_value() ? 1 : 0;
  return count;
}

std::uint64_t EvaluationCache::invalid_entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::uint64_t count = 0;
  for (const auto& [key, value] : values_) count += value.has_value() ? 0 : 1;
  return count;
}

Design RandomDesign(std::size_t n, int treatments, std::uint64_t seed,
                    std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> level(0, treatments - 1);
  Design x;
  x.levels.resize(n);
  for (auto& l : x.levels) l = static_cast<Level>(level(rng));
  return x;
}

unsigned ResolveWorkers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t count, unsigned workers,
                 const std::function<void(std::size_t, unsigned)>& task) {
  workers = static_cast<unsigned>(
      std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          task(i, w);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed = true;
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t NowNs() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

double SecondsSince(std::uint64_t start_ns) {
  return static_cast<double>(NowNs() - start_ns) * 1e-9;
}

}  // namespace internal

namespace {

// Counters and incumbent of one slice of the enumeration.
struct Tally {
  std::uint64_t considered = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
  std::uint64_t invalid = 0;
  std::optional<Design> best;
  std::optional<double> best_value;

  // Appends a later slice: counters add, the earlier incumbent wins ties.
  void Merge(const Tally& later) {
    considered += later.considered;
    evaluated += later.evaluated;
    skipped += later.skipped;
    invalid += later.invalid;
    if (later.best && (!best || improves(later.best_value, best_value))) {
      best = later.best;
      best_value = later.best_value;
    }
  }
};

void Visit(const Design& x, const AutomorphismGroup* group,
           CriterionEvaluator& evaluate, bool count_invalid, Tally& tally) {
  ++tally.considered;
  if (group != nullptr && !is_canonical(x, *group)) {
    ++tally.skipped;
    return;
  }
  const std::optional<double> value = evaluate(x);
  if (!value) {
    ++tally.invalid;
    if (count_invalid) ++tally.evaluated;
    return;
  }
  ++tally.evaluated;
  if (!tally.best || improves(value, tally.best_value)) {
    tally.best = x;
    tally.best_value = value;
  }
}

// Work units: every valid prefix of the shortest length giving at least
// kMinUnits of them. Independent of the worker count.
constexpr std::uint64_t kMinUnits = 256;

std::vector<Design> PrefixUnits(std::size_t n, int m, bool label_symmetry) {
  std::size_t len = 0;
  while (len < n && design_space_size(len, m, label_symmetry) < kMinUnits) ++len;
  return enumerate_designs(len, m, label_symmetry);
}

SearchReport Finish(const Tally& tally, const SearchConfig& config,
                    std::uint64_t group_size, std::uint64_t start_ns) {
  SearchReport report;
  if (tally.best) report.best_design = *tally.best;
  report.best_value = tally.best_value;
  report.num_eval = tally.evaluated;
  report.num_considered = tally.considered;
  report.num_skipped_noncanonical = tally.skipped;
  report.num_invalid = tally.invalid;
  report.seed = config.seed;
  report.group_size = group_size;
  if (config.reference_value && report.best_value) {
    report.efficiency = *config.reference_value / *report.best_value;
  }
  report.wall_time = internal::SecondsSince(start_ns);
  return report;
}

}  // namespace

SearchReport exhaustive_search(const Network& net, const ModelSpec& spec,
                               const SearchConfig& config,
                               const AutomorphismGroup* group) {
  const std::uint64_t start = internal::NowNs();
  std::optional<AutomorphismGroup> owned;
  if (config.use_automorphisms && group == nullptr) {
    owned.emplace(find_automorphisms(net, config.automorphism_cap));
    group = &*owned;
  }
  if (!config.use_automorphisms) group = nullptr;
  const std::uint64_t group_size = group ? group->size() : 1;

  const std::size_t n = net.num_design_nodes();
  const int m = spec.treatments();
  const bool label = config.use_label_symmetry;
  const std::uint64_t space = design_space_size(n, m, label);

  if (config.max_designs && *config.max_designs < space) {
    Tally tally;
    CriterionEvaluator evaluate(net, spec);
    DesignEnumerator it(n, m, label);
    for (std::uint64_t k = 0; k < *config.max_designs; ++k) {
      Visit(it.current(), group, evaluate, config.count_invalid_as_eval, tally);
      if (!it.advance()) break;
    }
    SearchReport report = Finish(tally, config, group_size, start);
    report.partial = true;
    return report;
  }

  const std::vector<Design> units = PrefixUnits(n, m, label);
  const unsigned workers = internal::ResolveWorkers(config.workers);
  std::vector<Tally> tallies(units.size());
  std::vector<std::optional<CriterionEvaluator>> evaluators(workers);
  internal::ParallelFor(units.size(), workers, [&](std::size_t u, unsigned w) {
    if (!evaluators[w]) evaluators[w].emplace(net, spec);
    DesignEnumerator it(n, m, label, units[u].levels);
    do {
      Visit(it.current(), group, *evaluators[w], config.count_invalid_as_eval,
            tallies[u]);
    } while (it.advance());
  });

  Tally total;
  for (const Tally& t : tallies) total.Merge(t);
  return Finish(total, config, group_size, start);
}

SearchReport coordinate_descent(const Network& net, const ModelSpec& spec,
                                const SearchConfig& config,
                                const AutomorphismGroup* group) {
  const std::uint64_t start = internal::NowNs();
  std::optional<AutomorphismGroup> owned;
  if (config.use_automorphisms && group == nullptr) {
    owned.emplace(find_automorphisms(net, config.automorphism_cap));
    group = &*owned;
  }
  if (!config.use_automorphisms) group = nullptr;

  const std::size_t n = net.num_design_nodes();
  const int m = spec.treatments();
  const bool explicit_starts = !config.start_designs.empty();
  if (!explicit_starts && config.restarts < 1) {
    throw InvalidArgument("coordinate descent needs at least one restart");
  }
  const std::size_t runs = explicit_starts
                               ? config.start_designs.size()
                               : static_cast<std::size_t>(config.restarts);
  for (const Design& s : config.start_designs) validate_design(s, n, m);

  internal::EvaluationCache cache(
      internal::OrbitKeyer(group, config.use_label_symmetry));

  struct RunResult {
    Design key;
    std::optional<double> value;
    std::uint64_t considered = 0;
  };
  std::vector<RunResult> results(runs);
  const unsigned workers = internal::ResolveWorkers(config.workers);
  std::vector<std::optional<CriterionEvaluator>> evaluators(workers);

  internal::ParallelFor(runs, workers, [&](std::size_t r, unsigned w) {
    if (!evaluators[w]) evaluators[w].emplace(net, spec);
    CriterionEvaluator& evaluate = *evaluators[w];
    RunResult& out = results[r];
    Design x = explicit_starts
                   ? config.start_designs[r]
                   : internal::RandomDesign(n, m, config.seed, r);
    auto current = cache.Get(x, evaluate);
    ++out.considered;
    std::size_t node = 0;
    while (node < n) {
      const Level kept = x[node];
      Level best_level = kept;
      auto best = current;
      for (int t = 0; t < m; ++t) {
        if (t == kept) continue;
        x[node] = static_cast<Level>(t);
        auto trial = cache.Get(x, evaluate);
        ++out.considered;
        if (improves(trial.value, best.value)) {
          best_level = static_cast<Level>(t);
          best = std::move(trial);
        }
      }
      x[node] = best_level;
      if (best_level != kept) {
        current = std::move(best);
        node = 0;
      } else {
        ++node;
      }
    }
    out.key = std::move(current.key);
    out.value = current.value;
  });

  Tally total;
  for (const RunResult& r : results) {
    total.considered += r.considered;
    if (r.value && (!total.best || improves(r.value, total.best_value))) {
      total.best = r.key;
      total.best_value = r.value;
    }
  }
  const std::uint64_t valid = cache.valid_entries();
  const std::uint64_t invalid = cache.invalid_entries();
  total.evaluated = valid + (config.count_invalid_as_eval ? invalid : 0);
  total.invalid = invalid;
  total.skipped = total.considered - valid - invalid;
  return Finish(total, config, group ? group->size() : 1, start);
}

SearchReport run_search(const Network& net, const ModelSpec& spec,
                        const SearchConfig& config,
                        const AutomorphismGroup* group) {
  return config.algorithm == Algorithm::kExhaustive
             ? exhaustive_search(net, spec, config, group)
             : coordinate_descent(net, spec, config, group);
}

}  // namespace netdesign
