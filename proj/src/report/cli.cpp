#include "complab/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "complab/classifier.hpp"
#include "complab/report.hpp"
#include "complab/search.hpp"

namespace complab {

namespace {

struct CommonFlags {
  std::string algorithm;
  std::uint64_t seed = defaults::kSeed;
  std::string weights = "all_ones";
  std::string out = "json";
  std::string output;
};

struct GridFlags {
  std::optional<std::uint64_t> n_min, n_max;
  std::optional<std::size_t> points, trials;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> search_budget, search_restarts;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("algorithm", f.algorithm, "Catalog algorithm id")->required();
  cmd->add_option("--seed", f.seed, "Base seed for every random draw")
      ->envname(std::string(defaults::kSeedEnvVar));
  cmd->add_option("--weights", f.weights, "Cost weights preset")
      ->check(CLI::IsMember({"all_ones", "comparisons_only"}));
  cmd->add_option("--out", f.out, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", f.output, "Write the report to this file instead of stdout");
}

void add_grid(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--n-min", g.n_min, "Smallest dimension of the geometric grid");
  cmd->add_option("--n-max", g.n_max, "Largest dimension of the geometric grid");
  cmd->add_option("--points", g.points, "Number of grid dimensions (>= 8)");
  cmd->add_option("--trials", g.trials, "Random instances per dimension");
  cmd->add_option("--tolerance", g.tolerance, "Allowed tail-ratio spread, in (0, 1)");
  cmd->add_option("--search-budget", g.search_budget,
                  "Runs per search where a witness is heuristic");
  cmd->add_option("--search-restarts", g.search_restarts, "Restarts per search");
}

StudyConfig study_from(AlgorithmId algorithm, const CommonFlags& f, const GridFlags& g) {
  StudyConfig c = default_study(algorithm);
  if (g.n_min) c.n_min = *g.n_min;
  if (g.n_max) c.n_max = *g.n_max;
  if (g.points) c.points = *g.points;
  if (g.trials) c.trials = *g.trials;
  if (g.tolerance) c.tolerance = *g.tolerance;
  if (g.search_budget) c.search_budget = *g.search_budget;
  if (g.search_restarts) c.search_restarts = *g.search_restarts;
  c.seed = f.seed;
  c.weights = parse_weight_preset(f.weights);
  c.validate();
  return c;
}

InstanceKind parse_instance_choice(std::string_view name) {
  if (name == "best") return InstanceKind::best_witness;
  if (name == "worst") return InstanceKind::worst_witness;
  return InstanceKind::random;
}

class Emitter {
 public:
  Emitter(const CommonFlags& f, std::ostream& out) : flags_(f), out_(out) {}

  // Sends the report to the --output file or the output stream.
  void emit(const std::string& text) {
    if (flags_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(flags_.output, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + flags_.output + "'");
    file << text;
  }

  void emit(const std::string& json, const std::vector<CostSample>& samples,
            const CostWeights& weights) {
    if (flags_.out == "csv") {
      std::ostringstream csv;
      write_csv(csv, samples, weights);
      emit(csv.str());
    } else {
      emit(json);
    }
  }

 private:
  const CommonFlags& flags_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operation-count complexity laboratory", "complab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  CommonFlags common;
  GridFlags grid;

  auto* classify_cmd = app.add_subcommand("classify", "Classify an algorithm's cost growth");
  add_common(classify_cmd, common);
  add_grid(classify_cmd, grid);

  auto* run_cmd = app.add_subcommand("run", "Run one instance and report its tallies");
  add_common(run_cmd, common);
  std::string instance_choice = "random";
  std::size_t run_n = 0;
  run_cmd->add_option("--instance", instance_choice, "Which instance to run")
      ->check(CLI::IsMember({"best", "worst", "random"}));
  run_cmd->add_option("--n", run_n, "Dimension")->required();

  auto* search_cmd = app.add_subcommand("search", "Search for a cheap or expensive instance");
  add_common(search_cmd, common);
  std::string mode = "max";
  std::size_t search_n = 0;
  std::uint64_t budget = 1000, restarts = 4;
  std::string neighborhood;
  search_cmd->add_option("--mode", mode, "min or max")
      ->check(CLI::IsMember({"min", "max", "minimize", "maximize"}));
  search_cmd->add_option("--n", search_n, "Dimension")->required();
  search_cmd->add_option("--budget", budget, "Total algorithm runs");
  search_cmd->add_option("--restarts", restarts, "Independent restarts");
  search_cmd->add_option("--neighborhood", neighborhood, "Move set (default per algorithm)")
      ->check(CLI::IsMember({"adjacent_swap", "random_swap", "scalar_tweak"}));

  auto* average_cmd = app.add_subcommand("average", "Average-case cost and its class");
  add_common(average_cmd, common);
  add_grid(average_cmd, grid);
  bool exact = false;
  average_cmd->add_flag("--exact", exact, "Exact means over every instance, n <= 8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitVerdict : kExitUsage;
  }

  try {
    const AlgorithmId algorithm = parse_algorithm(common.algorithm);
    const auto preset = parse_weight_preset(common.weights);
    const auto weights = weights_for(preset);
    Emitter emitter(common, out);

    if (*classify_cmd) {
      const auto verdict = classify(algorithm, study_from(algorithm, common, grid));
      emitter.emit(classify_report_json(verdict), verdict.samples, weights);
      return verdict.inconclusive() ? kExitInconclusive : kExitVerdict;
    }

    if (*run_cmd) {
      const RunRequest request{algorithm, run_n, parse_instance_choice(instance_choice),
                               common.seed, preset};
      const Instance instance =
          request.instance_kind == InstanceKind::best_witness    ? best_witness(algorithm, run_n)
          : request.instance_kind == InstanceKind::worst_witness ? worst_witness(algorithm, run_n)
                                                                 : random_instance(algorithm, run_n, common.seed);
      auto sample = run(algorithm, instance);
      sample.instance_kind = request.instance_kind;
      if (request.instance_kind == InstanceKind::random) sample.seed = common.seed;
      emitter.emit(run_report_json(request, instance, sample), {sample}, weights);
      return kExitVerdict;
    }

    if (*search_cmd) {
      SearchConfig sc;
      sc.mode = parse_search_mode(mode);
      sc.budget = budget;
      sc.restarts = restarts;
      sc.seed = common.seed;
      sc.neighborhood = neighborhood.empty() ? default_neighborhood(algorithm)
                                             : parse_neighborhood(neighborhood);
      sc.weights = weights;
      const auto outcome = search_extremal(algorithm, search_n, sc);
      emitter.emit(search_report_json(algorithm, search_n, sc, preset, outcome),
                   {outcome.sample}, weights);
      return kExitVerdict;
    }

    if (exact) {
      const std::uint64_t lo = grid.n_min.value_or(2);
      const std::uint64_t hi = grid.n_max.value_or(defaults::kExactMaxN);
      if (lo < 2 || hi < lo || hi > defaults::kExactMaxN)
        throw std::invalid_argument("--exact needs 2 <= n-min <= n-max <= " +
                                    std::to_string(defaults::kExactMaxN));
      std::vector<ExactAveragePoint> points;
      std::vector<CostSample> samples;
      for (std::uint64_t n = lo; n <= hi; ++n) {
        points.push_back(exact_average(algorithm, n, weights));
        if (common.out != "csv") continue;
        std::size_t index = 0;
        for (const auto& inst : enumerate_instances(algorithm, n)) {
          auto sample = run(algorithm, inst);
          sample.instance_kind = InstanceKind::enumerated;
          sample.trial = index++;
          samples.push_back(std::move(sample));
        }
      }
      emitter.emit(exact_average_report_json(algorithm, preset, points), samples, weights);
      return kExitVerdict;
    }

    const auto config = study_from(algorithm, common, grid);
    const auto average = average_class(algorithm, config);
    emitter.emit(average_report_json(algorithm, config, average), average.samples, weights);
    return average.fit.resolved ? kExitVerdict : kExitInconclusive;
  } catch (const CounterOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace complab
