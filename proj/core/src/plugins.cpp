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

#include <memory>
#include <random>

#include "netdesign/enumerate.hpp"
#include "netdesign/error.hpp"
#include "netdesign/search.hpp"
#include "search_internal.hpp"

namespace netdesign {

SearchReport run_with_plugins(const Network& net, const ModelSpec& spec,
                              const NextFn& next, const StopFn& stop,
                              const SearchConfig& config,
                              const PluginOptions& options,
                              const AutomorphismGroup* group) {
  const std::uint64_t start = internal::NowNs();
  std::optional<AutomorphismGroup> owned;
  if (config.use_automorphisms && group == nullptr) {
    owned.emplace(find_automorphisms(net, config.automorphism_cap));
    group = &*owned;
  }
  if (!config.use_automorphisms) group = nullptr;

  const std::size_t n = net.num_design_nodes();
  const bool cached = options.policy == OrbitPolicy::kRepresentativeCache;
  CriterionEvaluator evaluate(net, spec);
  internal::EvaluationCache cache(
      internal::OrbitKeyer(group, config.use_label_symmetry));

  SearchReport report;
  SearchHistory history;
  std::optional<double> best_value;
  while (true) {
    if (history.designs.size() >= options.safety_budget) {
      report.partial = true;
      break;
    }
    std::optional<Design> x = next(history);
    if (!x) break;
    validate_design(*x, n, spec.treatments());
    ++report.num_considered;

    std::optional<double> value;
    Design evaluated_design = *x;
    if (cached) {
      auto hit = cache.Get(*x, evaluate);
      value = hit.value;
      evaluated_design = std::move(hit.key);
      if (!hit.fresh) {
        ++report.num_skipped_noncanonical;
      } else if (!value) {
        ++report.num_invalid;
        if (config.count_invalid_as_eval) ++report.num_eval;
      } else {
        ++report.num_eval;
      }
    } else if (group != nullptr && !is_canonical(*x, *group)) {
      ++report.num_skipped_noncanonical;
    } else {
      value = evaluate(*x);
      if (!value) {
        ++report.num_invalid;
        if (config.count_invalid_as_eval) ++report.num_eval;
      } else {
        ++report.num_eval;
      }
    }
    if (value && improves(value, best_value)) {
      best_value = value;
      report.best_design = std::move(evaluated_design);
    }
    history.designs.push_back(std::move(*x));
    history.values.push_back(value);
    if (stop(history, report.num_eval)) break;
  }

  report.best_value = best_value;
  report.seed = config.seed;
  report.group_size = group ? group->size() : 1;
  if (config.reference_value && best_value) {
    report.efficiency = *config.reference_value / *best_value;
  }
  report.wall_time = internal::SecondsSince(start);
  return report;
}

NextFn lexicographic_next(std::size_t n, int treatments, bool label_symmetry) {
  auto it = std::make_shared<DesignEnumerator>(n, treatments, label_symmetry);
  auto started = std::make_shared<bool>(false);
  return [it, started](const SearchHistory&) -> std::optional<Design> {
    if (!*started) {
      *started = true;
      return it->current();
    }
    if (!it->advance()) return std::nullopt;
    return it->current();
  };
}

NextFn random_next(std::size_t n, int treatments, std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng, n, treatments](const SearchHistory&) -> std::optional<Design> {
    std::uniform_int_distribution<int> level(0, treatments - 1);
    Design x;
    x.levels.resize(n);
    for (auto& l : x.levels) l = static_cast<Level>(level(*rng));
    return x;
  };
}

namespace {

// Coordinate descent as a `next` plug-in. Each call reads the value of the
// previous proposal from the history and proposes the following candidate:
// the remaining levels at the current node, then the next node, restarting
// from node 0 after an improving move.
class DescentStepper {
 public:
  DescentStepper(Design start, int treatments)
      : current_(std::move(start)), m_(treatments) {}

  std::optional<Design> operator()(const SearchHistory& history) {
    if (!proposed_start_) {
      proposed_start_ = true;
      return current_;
    }
    const std::optional<double> last = history.values.back();
    if (!scanning_) {
      current_value_ = last;
      BeginNode(0);
    } else if (improves(last, best_value_)) {
      best_level_ = static_cast<Level>(trial_);
      best_value_ = last;
    }
    return Propose();
  }

 private:
  void BeginNode(std::size_t node) {
    scanning_ = true;
    node_ = node;
    best_level_ = node < current_.size() ? current_[node] : 0;
    best_value_ = current_value_;
    trial_ = -1;
  }

  std::optional<Design> Propose() {
    while (node_ < current_.size()) {
      const Level kept = current_[node_];
      ++trial_;
      if (trial_ == kept) ++trial_;
      if (trial_ < m_) {
        Design candidate = current_;
        candidate[node_] = static_cast<Level>(trial_);
        return candidate;
      }
      if (best_level_ != kept) {
        current_[node_] = best_level_;
        current_value_ = best_value_;
        BeginNode(0);
      } else {
        BeginNode(node_ + 1);
      }
    }
    return std::nullopt;
  }

  Design current_;
  int m_;
  bool proposed_start_ = false;
  bool scanning_ = false;
  std::optional<double> current_value_;
  std::size_t node_ = 0;
  int trial_ = -1;
  Level best_level_ = 0;
  std::optional<double> best_value_;
};

}  // namespace

NextFn coordinate_descent_next(Design start, int treatments) {
  if (treatments < 2) throw InvalidArgument("need at least 2 treatments");
  auto stepper = std::make_shared<DescentStepper>(std::move(start), treatments);
  return [stepper](const SearchHistory& h) { return (*stepper)(h); };
}

StopFn stop_at_design(Design last) {
  return [last = std::move(last)](const SearchHistory& h, std::uint64_t) {
    return !h.designs.empty() && h.designs.back() == last;
  };
}

StopFn stop_after_evaluations(std::uint64_t budget) {
  return [budget](const SearchHistory&, std::uint64_t evals) {
    return evals >= budget;
  };
}

StopFn never_stop() {
  return [](const SearchHistory&, std::uint64_t) { return false; };
}

}  // namespace netdesign
