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

#include "netdesign/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netdesign/automorph.hpp"
#include "netdesign/builders.hpp"
#include "netdesign/edge_list.hpp"
#include "netdesign/enumerate.hpp"
#include "netdesign/error.hpp"
#include "netdesign/lnem.hpp"
#include "reproduce.hpp"

namespace netdesign::cli {
namespace {

using Json = nlohmann::ordered_json;

struct SourceOptions {
  std::string network;
  std::optional<std::size_t> n;
  bool directed = false;
  std::string blocks;
  std::string row_column;
  std::string crossover;
  bool period_blocks = false;
};

struct SearchOptions {
  int treatments = 0;
  std::string criterion = "As";
  std::string validity = "contrasts";
  std::string algorithm = "exhaustive";
  bool no_automorphisms = false;
  bool no_label_symmetry = false;
  int restarts = 100;
  std::uint64_t seed = 0;
  std::string format = "text";
  unsigned workers = 0;
  std::optional<std::uint64_t> max_designs;
  bool count_invalid = false;
  std::optional<double> reference;
};

void AddSourceOptions(CLI::App* app, SourceOptions& s) {
  auto* group = app->add_option_group("source", "Exactly one network source");
  group->add_option("--network", s.network,
                    "Edge-list file of i-j or i->j tokens with optional header "
                    "and block-role lines");
  group->add_option("--blocks", s.blocks,
                    "Block sizes separated by commas, e.g. 3,3,3");
  group->add_option("--row-column", s.row_column,
                    "Row-column layout RxC, e.g. 4x4");
  group->add_option("--crossover", s.crossover,
                    "Crossover layout SxP: S subjects, P periods");
  group->require_option(1);
  app->add_option("--n", s.n, "Node count when the file has no header");
  app->add_flag("--directed", s.directed,
                "Treat a headerless file as directed");
  app->add_flag("--period-blocks", s.period_blocks,
                "Add period block nodes to --crossover");
}

std::vector<int> SplitInts(const std::string& text, char sep,
                           const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw InvalidArgument(flag + ": malformed value '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument(flag + ": empty value");
  return out;
}

std::pair<int, int> SplitPair(const std::string& text,
                              const std::string& flag) {
  const std::vector<int> v = SplitInts(text, 'x', flag);
  if (v.size() != 2) throw InvalidArgument(flag + " expects AxB, got " + text);
  return {v[0], v[1]};
}

// Augmented layouts need m to number their block pseudo-treatments.
Network BuildNetwork(const SourceOptions& s, int treatments) {
  const bool needs_m =
      !s.blocks.empty() || !s.row_column.empty() || !s.crossover.empty();
  if (needs_m && treatments < 2) {
    throw InvalidArgument("--treatments (at least 2) is required for " 
                          "block, row-column and crossover layouts");
  }
  if (!s.blocks.empty()) {
    return augment_blocks(SplitInts(s.blocks, ',', "--blocks"), treatments);
  }
  if (!s.row_column.empty()) {
    const auto [r, c] = SplitPair(s.row_column, "--row-column");
    return augment_row_column(r, c, treatments);
  }
  if (!s.crossover.empty()) {
    const auto [subjects, periods] = SplitPair(s.crossover, "--crossover");
    return augment_crossover(subjects, periods, treatments, s.period_blocks);
  }
  NetworkFileOptions file;
  file.num_nodes = s.n;
  if (s.directed || s.n) file.directed = s.directed;
  return load_network(s.network, file);
}

Json DesignJson(const Design& x) {
  Json out = Json::array();
  for (int t : x.treatments()) out.push_back(t);
  return out;
}

Json OptionalJson(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string FormatDouble(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string OptionalText(const std::optional<double>& v, const char* none) {
  return v ? FormatDouble(*v) : std::string(none);
}

int RunSearch(const SourceOptions& source, const SearchOptions& opt,
              std::ostream& out) {
  const Network net = BuildNetwork(source, opt.treatments);
  const Criterion criterion =
      opt.criterion == "Ds" ? Criterion::kDs : Criterion::kAs;
  const ModelSpec spec(net, opt.treatments, criterion,
                       opt.validity == "identified" ? Validity::kIdentified
                                                    : Validity::kEstimableContrasts);

  SearchConfig config;
  config.algorithm = opt.algorithm == "cd" ? Algorithm::kCoordinateDescent
                                           : Algorithm::kExhaustive;
  config.use_automorphisms = !opt.no_automorphisms;
  config.use_label_symmetry = !opt.no_label_symmetry;
  config.restarts = opt.restarts;
  config.seed = opt.seed;
  config.workers = opt.workers;
  config.max_designs = opt.max_designs;
  config.count_invalid_as_eval = opt.count_invalid;
  config.reference_value = opt.reference;
  const SearchReport report = run_search(net, spec, config);

  if (opt.format == "json") {
    out << report_json(report);
  } else if (opt.format == "csv") {
    out << report_csv(report);
  } else {
    out << report_text(report);
  }
  return report.partial ? kExitBudget : kExitOk;
}

int RunAutos(const SourceOptions& source, int treatments, bool verbose,
             const std::string& format, std::ostream& out) {
  const Network net = BuildNetwork(source, treatments);
  const AutomorphismGroup group = find_automorphisms(net);
  if (format == "json") {
    Json doc;
    doc["group_size"] = group.size();
    if (verbose) {
      Json elements = Json::array();
      for (std::size_t k = 0; k < group.size(); ++k) {
        elements.push_back(cycle_notation(group.element(k)));
      }
      doc["elements"] = std::move(elements);
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "group_size: " << group.size() << '\n';
  if (verbose) {
    for (std::size_t k = 0; k < group.size(); ++k) {
      out << cycle_notation(group.element(k)) << '\n';
    }
  }
  return kExitOk;
}

int RunOrbits(const SourceOptions& source, int treatments, std::ostream& out) {
  const Network net = BuildNetwork(source, treatments);
  const AutomorphismGroup group = find_automorphisms(net);
  std::uint64_t canonical = 0;
  const std::uint64_t space =
      design_space_size(net.num_design_nodes(), treatments, false);
  if (space > 10'000'000) {
    throw InvalidArgument("orbits is a brute-force check limited to 1e7 "
                          "designs; this network has " +
                          std::to_string(space));
  }
  DesignEnumerator walk(net.num_design_nodes(), treatments, false);
  do {
    canonical += is_canonical(walk.current(), group) ? 1 : 0;
  } while (walk.advance());
  out << "group_size: " << group.size() << '\n'
      << "designs: " << space << '\n'
      << "orbits: " << count_orbits_bruteforce(group, treatments) << '\n'
      << "canonical: " << canonical << '\n';
  return kExitOk;
}

}  // namespace

std::string report_json(const SearchReport& r) {
  Json doc;
  doc["best_design"] = DesignJson(r.best_design);
  doc["best_value"] = OptionalJson(r.best_value);
  doc["num_eval"] = r.num_eval;
  doc["num_considered"] = r.num_considered;
  doc["num_skipped_noncanonical"] = r.num_skipped_noncanonical;
  doc["num_invalid"] = r.num_invalid;
  doc["wall_time"] = r.wall_time;
  doc["seed"] = r.seed;
  doc["efficiency"] = OptionalJson(r.efficiency);
  doc["group_size"] = r.group_size;
  doc["partial"] = r.partial;
  return doc.dump(2) + "\n";
}

std::string report_text(const SearchReport& r) {
  std::ostringstream out;
  out << "best_design: " << to_string(r.best_design) << '\n'
      << "best_value: " << OptionalText(r.best_value, "INVALID") << '\n'
      << "num_eval: " << r.num_eval << '\n'
      << "num_considered: " << r.num_considered << '\n'
      << "num_skipped_noncanonical: " << r.num_skipped_noncanonical << '\n'
      << "num_invalid: " << r.num_invalid << '\n'
      << "wall_time: " << r.wall_time << '\n'
      << "seed: " << r.seed << '\n'
      << "efficiency: " << OptionalText(r.efficiency, "-") << '\n'
      << "group_size: " << r.group_size << '\n'
      << "partial: " << (r.partial ? "true" : "false") << '\n';
  return out.str();
}

std::string report_csv(const SearchReport& r) {
  std::ostringstream out;
  out << "best_design,best_value,num_eval,num_considered,"
         "num_skipped_noncanonical,num_invalid,wall_time,seed,efficiency,"
         "group_size,partial\n"
      << to_string(r.best_design) << ',' << OptionalText(r.best_value, "")
      << ',' << r.num_eval << ',' << r.num_considered << ','
      << r.num_skipped_noncanonical << ',' << r.num_invalid << ','
      << r.wall_time << ',' << r.seed << ',' << OptionalText(r.efficiency, "")
      << ',' << r.group_size << ',' << (r.partial ? 1 : 0) << '\n';
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Optimal designs on networks with automorphism pruning",
               "netdesign"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  SourceOptions source;
  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "Find an optimal design");
  AddSourceOptions(search_cmd, source);
  search_cmd->add_option("--treatments", search.treatments, "Treatments m")
      ->required()
      ->check(CLI::Range(2, kMaxTreatments));
  search_cmd->add_option("--criterion", search.criterion, "As or Ds")
      ->check(CLI::IsMember({"As", "Ds"}));
  search_cmd
      ->add_option("--validity", search.validity,
                   "contrasts: every treatment difference estimable; "
                   "identified: information matrix at its attainable rank")
      ->check(CLI::IsMember({"contrasts", "identified"}));
  search_cmd->add_option("--algorithm", search.algorithm, "exhaustive or cd")
      ->check(CLI::IsMember({"exhaustive", "cd"}));
  search_cmd->add_flag("--no-automorphisms", search.no_automorphisms,
                       "Evaluate every design, not one per orbit");
  search_cmd->add_flag("--no-label-symmetry", search.no_label_symmetry,
                       "Do not fix treatment 1 on the first unit");
  search_cmd->add_option("--restarts", search.restarts,
                         "Coordinate descent random starts")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search.seed, "Seed for random starts");
  search_cmd->add_option("--format", search.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  search_cmd->add_option("--workers", search.workers,
                         "Worker threads, 0 for all cores");
  search_cmd->add_option("--max-designs", search.max_designs,
                         "Stop exhaustive search after this many candidates "
                         "(exit status 3)");
  search_cmd->add_flag("--count-invalid", search.count_invalid,
                       "Include non-estimable designs in num_eval");
  search_cmd->add_option("--reference", search.reference,
                         "Known optimal value; adds efficiency to the report");

  SourceOptions autos_source;
  int autos_treatments = 0;
  bool verbose = false;
  std::string autos_format = "text";
  auto* autos_cmd =
      app.add_subcommand("autos", "Automorphism group of a network");
  AddSourceOptions(autos_cmd, autos_source);
  autos_cmd->add_option("--treatments", autos_treatments,
                        "Treatments m (needed for augmented layouts)");
  autos_cmd->add_flag("--verbose", verbose, "List elements in cycle notation");
  autos_cmd->add_option("--format", autos_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  SourceOptions orbits_source;
  int orbits_treatments = 0;
  auto* orbits_cmd = app.add_subcommand(
      "orbits", "Brute-force orbit count over all m^N designs (small N)");
  AddSourceOptions(orbits_cmd, orbits_source);
  orbits_cmd->add_option("--treatments", orbits_treatments, "Treatments m")
      ->required()
      ->check(CLI::Range(2, kMaxTreatments));

  ReproduceOptions reproduce;
  reproduce.fixture_dir = NETDESIGN_FIXTURE_DIR;
  auto* reproduce_cmd = app.add_subcommand(
      "reproduce", "Rerun a published table and print it as CSV");
  reproduce_cmd->add_option("table", reproduce.table, "t1, t2 or t4")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t4"}));
  reproduce_cmd->add_option("--fixtures", reproduce.fixture_dir,
                            "Directory holding example1..6.edges");
  reproduce_cmd->add_option("--workers", reproduce.workers,
                            "Worker threads, 0 for all cores");
  reproduce_cmd->add_option("--seed", reproduce.seed,
                            "Seed for coordinate descent starts (t2)");
  reproduce_cmd->add_option("--restarts", reproduce.restarts,
                            "Coordinate descent random starts (t2)")
      ->check(CLI::PositiveNumber);
  reproduce_cmd->add_flag("--full", reproduce.full,
                          "Include the 4x4 row-column row with 4 treatments "
                          "(about 1.8e8 designs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*search_cmd) return RunSearch(source, search, out);
    if (*autos_cmd) {
      return RunAutos(autos_source, autos_treatments, verbose, autos_format,
                      out);
    }
    if (*orbits_cmd) return RunOrbits(orbits_source, orbits_treatments, out);
    reproduce_table(reproduce, out, err);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const GroupTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace netdesign::cli
