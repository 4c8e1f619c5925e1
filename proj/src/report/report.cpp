#include "complab/report.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#ifndef COMPLAB_VERSION
#define COMPLAB_VERSION "0.0.0"
#endif

namespace complab {

namespace {

using Json = nlohmann::ordered_json;

// Shortest decimal form that reads back to the same double.
std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json header(std::string_view command) {
  return Json{{"schema_version", kReportSchemaVersion},
              {"tool", {{"name", "complab"}, {"version", tool_version()}}},
              {"command", command}};
}

Json counts_json(const CostCounter& counter) {
  Json j = Json::object();
  for (OpKind kind : kAllOpKinds) j[std::string(to_string(kind))] = counter[kind];
  return j;
}

Json sample_json(const CostSample& s, const CostWeights& weights) {
  Json j{{"algorithm", to_string(s.algorithm)},
         {"n", s.n},
         {"instance_kind", to_string(s.instance_kind)},
         {"trial", s.trial ? Json(*s.trial) : Json(nullptr)},
         {"seed", s.seed ? Json(*s.seed) : Json(nullptr)},
         {"counts", counts_json(s.counter)},
         {"total", total(s.counter, weights)}};
  Json metrics = Json::object();
  for (const auto& [name, value] : s.metrics) metrics[name] = value;
  j["metrics"] = std::move(metrics);
  return j;
}

Json instance_json(const Instance& inst) {
  return Json{{"domain", inst.domain_tag},
              {"n", inst.n},
              {"data", inst.data},
              {"key", inst.key ? Json(*inst.key) : Json(nullptr)}};
}

Json fit_json(const FitResult& f) {
  return Json{{"class", to_string(f.growth)},
              {"resolved", f.resolved},
              {"constant", f.constant},
              {"b", f.lower},
              {"a", f.upper},
              {"n0", f.n0},
              {"max_tail_deviation", f.max_tail_deviation}};
}

Json band_json(const ComplexityBand& b) {
  return Json{{"lower", to_string(b.lower)}, {"upper", to_string(b.upper)},
              {"b", b.lower_constant},       {"a", b.upper_constant},
              {"n0", b.n0},                  {"minimal", b.minimal}};
}

Json series_json(const CostSeries& s) {
  Json pts = Json::array();
  for (const auto& p : s.points()) pts.push_back({{"n", p.n}, {"cost", p.cost}});
  return pts;
}

Json defaults_json() {
  return Json{{"n_min", defaults::kNMin},
              {"n_max", defaults::kNMax},
              {"quadratic_n_min", defaults::kQuadraticNMin},
              {"quadratic_n_max", defaults::kQuadraticNMax},
              {"points", defaults::kPoints},
              {"trials", defaults::kTrials},
              {"tolerance", defaults::kTolerance},
              {"seed", defaults::kSeed},
              {"search_budget", defaults::kSearchBudget},
              {"search_restarts", defaults::kSearchRestarts},
              {"exact_max_n", defaults::kExactMaxN}};
}

Json fitter_json(double tolerance) {
  Json rungs = Json::array();
  for (GrowthClass g : ladder()) rungs.push_back(to_string(g));
  return Json{{"ladder", std::move(rungs)},
              {"tolerance", tolerance},
              {"tail", "upper_half"},
              {"min_points", CostSeries::kMinSeriesPoints},
              {"log_base", 2}};
}

std::string_view instance_space(AlgorithmId id) {
  switch (family_of(id)) {
    case InstanceFamily::permutation: return "permutations of 1..n";
    case InstanceFamily::sorted_insert: return "sorted 1..n with key over n+1 insertion ranks";
    case InstanceFamily::sorted_search: return "sorted 1..n with key in 1..n";
    case InstanceFamily::integer_pair: return "pairs in [1, n]^2";
  }
  return "unknown";
}

Json study_json(AlgorithmId algorithm, const StudyConfig& c) {
  return Json{{"algorithm", to_string(algorithm)},
              {"n_min", c.n_min},
              {"n_max", c.n_max},
              {"points", c.points},
              {"grid", geometric_grid(c.n_min, c.n_max, c.points)},
              {"trials", c.trials},
              {"tolerance", c.tolerance},
              {"seed", c.seed},
              {"weights", to_string(c.weights)},
              {"search_budget", c.search_budget},
              {"search_restarts", c.search_restarts},
              {"output_format", "json"},
              {"instance_space", instance_space(algorithm)},
              {"defaults", defaults_json()}};
}

Json average_json(const AverageResult& a) {
  Json by_n = Json::array();
  for (const auto& p : a.by_n)
    by_n.push_back({{"n", p.n}, {"mean", p.mean}, {"std_error", p.std_error},
                    {"trials", p.trials}});
  Json exact = Json::array();
  for (const auto& e : a.exact) {
    Json metrics = Json::object();
    for (const auto& [name, value] : e.exact_metric_means) metrics[name] = value;
    exact.push_back({{"n", e.n},
                     {"instances", e.instances},
                     {"exact_mean", e.exact_mean},
                     {"exact_metric_means", std::move(metrics)},
                     {"monte_carlo_mean", e.monte_carlo_mean},
                     {"monte_carlo_std_error", e.monte_carlo_std_error}});
  }
  return Json{{"fit", fit_json(a.fit)}, {"by_n", std::move(by_n)}, {"exact", std::move(exact)}};
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::json ? "json" : "csv";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string_view tool_version() { return COMPLAB_VERSION; }

void write_csv(std::ostream& out, const std::vector<CostSample>& samples,
               const CostWeights& weights) {
  out << kCsvHeader << '\n';
  for (const auto& s : samples) {
    out << to_string(s.algorithm) << ',' << s.n << ',' << to_string(s.instance_kind) << ',';
    if (s.trial) out << *s.trial;
    out << ',';
    if (s.seed) out << *s.seed;
    for (OpKind kind : kAllOpKinds) out << ',' << s.counter[kind];
    out << ',' << format_number(total(s.counter, weights)) << '\n';
  }
}

std::string classify_report_json(const Verdict& v) {
  const auto weights = weights_for(v.config.weights);
  Json j = header("classify");
  j["config"] = study_json(v.algorithm, v.config);
  j["fitter"] = fitter_json(v.config.tolerance);

  Json verdict{{"algorithm", to_string(v.algorithm)},
               {"status", v.inconclusive() ? "inconclusive"
                          : *v.homogeneous ? "homogeneous"
                                           : "non_homogeneous"},
               {"homogeneous", v.homogeneous ? Json(*v.homogeneous) : Json(nullptr)},
               {"band", v.band ? band_json(*v.band) : Json(nullptr)},
               {"witness_certified", v.witness_certified},
               {"best_fit", fit_json(v.best_fit)},
               {"worst_fit", fit_json(v.worst_fit)},
               {"average_fit", fit_json(v.average.fit)}};
  Json gaps = Json::array();
  for (const auto& g : v.gap_by_n)
    gaps.push_back({{"n", g.n}, {"comparisons", g.comparisons}, {"total", g.total}});
  verdict["gap_by_n"] = std::move(gaps);
  j["verdict"] = std::move(verdict);

  Json series = Json::array();
  for (const auto& s : v.series)
    series.push_back({{"name", s.name},
                      {"points", series_json(s.series)},
                      {"fit", fit_json(s.fit)},
                      {"in_band", v.band ? Json(band_membership(s.series, *v.band,
                                                                v.config.tolerance))
                                         : Json(nullptr)}});
  j["series"] = std::move(series);
  j["average"] = average_json(v.average);

  Json samples = Json::array();
  for (const auto& s : v.samples) samples.push_back(sample_json(s, weights));
  j["samples"] = std::move(samples);
  return finish(j);
}

std::string run_report_json(const RunRequest& r, const Instance& instance,
                            const CostSample& sample) {
  Json j = header("run");
  j["config"] = Json{{"algorithm", to_string(r.algorithm)},
                     {"n", r.n},
                     {"instance", to_string(r.instance_kind)},
                     {"seed", r.seed},
                     {"weights", to_string(r.weights)},
                     {"output_format", "json"},
                     {"instance_space", instance_space(r.algorithm)}};
  j["sample"] = sample_json(sample, weights_for(r.weights));
  j["instance"] = instance_json(instance);
  return finish(j);
}

std::string search_report_json(AlgorithmId algorithm, std::size_t n,
                               const SearchConfig& c, WeightPreset weights,
                               const SearchOutcome& outcome) {
  Json j = header("search");
  j["config"] = Json{{"algorithm", to_string(algorithm)},
                     {"n", n},
                     {"mode", to_string(c.mode)},
                     {"budget", c.budget},
                     {"restarts", c.restarts},
                     {"neighborhood", to_string(c.neighborhood)},
                     {"seed", c.seed},
                     {"weights", to_string(weights)},
                     {"output_format", "json"},
                     {"instance_space", instance_space(algorithm)}};
  Json trajectory = Json::array();
  for (const auto& t : outcome.trajectory)
    trajectory.push_back({{"evaluation", t.evaluation}, {"best_cost", t.best_cost}});
  j["outcome"] = Json{{"cost", outcome.cost},
                      {"evaluations_used", outcome.evaluations_used},
                      {"trajectory", std::move(trajectory)},
                      {"sample", sample_json(outcome.sample, c.weights)},
                      {"instance", instance_json(outcome.instance)}};
  return finish(j);
}

std::string average_report_json(AlgorithmId algorithm, const StudyConfig& config,
                                const AverageResult& average) {
  Json j = header("average");
  j["config"] = study_json(algorithm, config);
  j["fitter"] = fitter_json(config.tolerance);
  j["average"] = average_json(average);
  Json samples = Json::array();
  for (const auto& s : average.samples) samples.push_back(sample_json(s, weights_for(config.weights)));
  j["samples"] = std::move(samples);
  return finish(j);
}

std::string exact_average_report_json(AlgorithmId algorithm, WeightPreset weights,
                                      const std::vector<ExactAveragePoint>& points) {
  Json j = header("average");
  j["config"] = Json{{"algorithm", to_string(algorithm)},
                     {"exact", true},
                     {"weights", to_string(weights)},
                     {"output_format", "json"},
                     {"instance_space", instance_space(algorithm)}};
  Json exact = Json::array();
  for (const auto& e : points) {
    Json metrics = Json::object();
    for (const auto& [name, value] : e.exact_metric_means) metrics[name] = value;
    exact.push_back({{"n", e.n},
                     {"instances", e.instances},
                     {"exact_mean", e.exact_mean},
                     {"exact_metric_means", std::move(metrics)}});
  }
  j["exact"] = std::move(exact);
  return finish(j);
}

}  // namespace complab
