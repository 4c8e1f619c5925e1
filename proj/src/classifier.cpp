#include "complab/classifier.hpp"

#include <cmath>
#include <stdexcept>

#include "complab/search.hpp"

namespace complab {

namespace {

// Stream tags keep the random draws of different purposes independent.
constexpr std::uint64_t kRandomStream = 1;
constexpr std::uint64_t kSearchStream = 2;

struct Extremes {
  CostSample best;
  CostSample worst;
  double best_cost = 0.0;
  double worst_cost = 0.0;
  std::optional<CostSample> searched_min;
  std::optional<CostSample> searched_max;
  double searched_min_cost = 0.0;
  double searched_max_cost = 0.0;
};

CostSample labelled(CostSample sample, InstanceKind kind) {
  sample.instance_kind = kind;
  return sample;
}

// Witness runs, improved by search on sides whose witness is heuristic.
Extremes extremes_at(AlgorithmId algorithm, std::uint64_t n, const StudyConfig& config,
                     const CostWeights& weights) {
  Extremes e;
  e.best = labelled(run(algorithm, best_witness(algorithm, n)), InstanceKind::best_witness);
  e.worst = labelled(run(algorithm, worst_witness(algorithm, n)), InstanceKind::worst_witness);
  e.best_cost = total(e.best.counter, weights);
  e.worst_cost = total(e.worst.counter, weights);

  const auto searched = [&](SearchMode mode, std::uint64_t side) {
    SearchConfig sc;
    sc.mode = mode;
    sc.budget = config.search_budget;
    sc.restarts = config.search_restarts;
    sc.seed = derive_seed(config.seed, n, side, kSearchStream);
    sc.neighborhood = default_neighborhood(algorithm);
    sc.weights = weights;
    return search_extremal(algorithm, n, sc);
  };
  if (!best_witness_certified(algorithm)) {
    auto out = searched(SearchMode::minimize, 0);
    e.searched_min = out.sample;
    e.searched_min_cost = out.cost;
    if (out.cost < e.best_cost) {
      e.best = std::move(out.sample);
      e.best_cost = out.cost;
    }
  }
  if (!worst_witness_certified(algorithm)) {
    auto out = searched(SearchMode::maximize, 1);
    e.searched_max = out.sample;
    e.searched_max_cost = out.cost;
    if (out.cost > e.worst_cost) {
      e.worst = std::move(out.sample);
      e.worst_cost = out.cost;
    }
  }
  return e;
}

GapPoint gap_of(std::uint64_t n, const Extremes& e) {
  const auto comparisons = CostWeights::comparisons_only();
  return {n, total(e.worst.counter, comparisons) - total(e.best.counter, comparisons),
          e.worst_cost - e.best_cost};
}

FittedSeries fitted(std::string name, std::vector<SeriesPoint> points, double tolerance) {
  CostSeries series(std::move(points));
  auto fit = fit_class(series, tolerance);
  return {std::move(name), std::move(series), fit};
}

struct Moments {
  double mean = 0.0;
  double std_error = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    const double variance = ss / static_cast<double>(xs.size() - 1);
    m.std_error = std::sqrt(variance / static_cast<double>(xs.size()));
  }
  return m;
}

// Monte Carlo mean at one n; appends the samples it draws.
Moments monte_carlo(AlgorithmId algorithm, std::uint64_t n, const StudyConfig& config,
                    const CostWeights& weights, std::vector<CostSample>& samples) {
  std::vector<double> costs;
  costs.reserve(config.trials);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const auto seed = derive_seed(config.seed, n, trial, kRandomStream);
    auto sample = labelled(run(algorithm, random_instance(algorithm, n, seed)),
                           InstanceKind::random);
    sample.seed = seed;
    sample.trial = trial;
    costs.push_back(total(sample.counter, weights));
    samples.push_back(std::move(sample));
  }
  return moments(costs);
}

}  // namespace

ComplexityBand minimal_band(const FitResult& best_fit, const FitResult& worst_fit) {
  if (!best_fit.resolved || !worst_fit.resolved)
    throw std::invalid_argument("a band needs two resolved fits");
  if (worst_fit.growth < best_fit.growth)
    throw std::invalid_argument("lower class " + std::string(to_string(best_fit.growth)) +
                                " exceeds upper class " +
                                std::string(to_string(worst_fit.growth)));
  ComplexityBand band;
  band.lower = best_fit.growth;
  band.upper = worst_fit.growth;
  band.lower_constant = best_fit.lower;
  band.upper_constant = worst_fit.upper;
  band.n0 = std::max(best_fit.n0, worst_fit.n0);
  band.minimal = true;
  return band;
}

bool band_membership(const CostSeries& series, const ComplexityBand& band,
                     double tolerance) {
  if (!(tolerance > 0.0 && tolerance < 1.0))
    throw std::invalid_argument("tolerance must lie in (0, 1)");
  const auto& pts = series.points();
  const std::size_t first = series.tail_begin();
  const auto ratio = [&](std::size_t i, GrowthClass g) {
    return pts[i].cost / evaluate(g, static_cast<double>(pts[i].n));
  };
  const double lower_start = ratio(first, band.lower);
  const double upper_start = ratio(first, band.upper);
  bool lower_by_constant = true, lower_by_trend = true;
  bool upper_by_constant = true, upper_by_trend = true;
  for (std::size_t i = first; i < pts.size(); ++i) {
    const double rf = ratio(i, band.lower);
    const double rg = ratio(i, band.upper);
    lower_by_constant = lower_by_constant && rf * (1.0 + tolerance) >= band.lower_constant;
    lower_by_trend = lower_by_trend && rf * (1.0 + tolerance) >= lower_start;
    upper_by_constant = upper_by_constant && rg <= band.upper_constant * (1.0 + tolerance);
    upper_by_trend = upper_by_trend && rg <= upper_start * (1.0 + tolerance);
  }
  return (lower_by_constant || lower_by_trend) && (upper_by_constant || upper_by_trend);
}

CostSeries AverageResult::series() const {
  std::vector<SeriesPoint> pts;
  for (const auto& p : by_n) pts.push_back({p.n, p.mean});
  return CostSeries(std::move(pts));
}

const FittedSeries* Verdict::find_series(std::string_view name) const {
  for (const auto& s : series)
    if (s.name == name) return &s;
  return nullptr;
}

ExactAveragePoint exact_average(AlgorithmId algorithm, std::size_t n,
                                const CostWeights& weights) {
  ExactAveragePoint point;
  point.n = n;
  double sum = 0.0;
  std::map<std::string, double> metric_sums;
  for (const auto& inst : enumerate_instances(algorithm, n)) {
    const auto sample = run(algorithm, inst);
    sum += total(sample.counter, weights);
    for (const auto& [name, value] : sample.metrics)
      metric_sums[name] += static_cast<double>(value);
    ++point.instances;
  }
  const auto count = static_cast<double>(point.instances);
  point.exact_mean = sum / count;
  for (const auto& [name, value] : metric_sums) point.exact_metric_means[name] = value / count;
  return point;
}

AverageResult average_class(AlgorithmId algorithm, const StudyConfig& config) {
  config.validate();
  const auto weights = weights_for(config.weights);
  AverageResult result;
  for (std::uint64_t n : geometric_grid(config.n_min, config.n_max, config.points)) {
    const auto m = monte_carlo(algorithm, n, config, weights, result.samples);
    result.by_n.push_back({n, m.mean, m.std_error, config.trials});
  }
  for (std::size_t n = 2; n <= defaults::kExactMaxN; ++n) {
    auto point = exact_average(algorithm, n, weights);
    std::vector<CostSample> discard;
    const auto m = monte_carlo(algorithm, n, config, weights, discard);
    point.monte_carlo_mean = m.mean;
    point.monte_carlo_std_error = m.std_error;
    result.exact.push_back(std::move(point));
  }
  result.fit = fit_class(result.series(), config.tolerance);
  return result;
}

GapPoint inhomogeneity_gap(AlgorithmId algorithm, std::uint64_t n,
                           const StudyConfig& config) {
  const auto weights = weights_for(config.weights);
  return gap_of(n, extremes_at(algorithm, n, config, weights));
}

Verdict classify(AlgorithmId algorithm, const StudyConfig& config) {
  config.validate();
  const auto weights = weights_for(config.weights);
  Verdict v;
  v.algorithm = algorithm;
  v.config = config;
  v.witness_certified =
      best_witness_certified(algorithm) && worst_witness_certified(algorithm);

  std::vector<SeriesPoint> best, worst, searched_min, searched_max;
  for (std::uint64_t n : geometric_grid(config.n_min, config.n_max, config.points)) {
    auto e = extremes_at(algorithm, n, config, weights);
    best.push_back({n, e.best_cost});
    worst.push_back({n, e.worst_cost});
    v.gap_by_n.push_back(gap_of(n, e));
    if (e.searched_min) {
      searched_min.push_back({n, e.searched_min_cost});
      // The searched instance may already be the best sample; record once.
      if (e.best.instance_kind != InstanceKind::searched)
        v.samples.push_back(std::move(*e.searched_min));
    }
    if (e.searched_max) {
      searched_max.push_back({n, e.searched_max_cost});
      if (e.worst.instance_kind != InstanceKind::searched)
        v.samples.push_back(std::move(*e.searched_max));
    }
    v.samples.push_back(std::move(e.best));
    v.samples.push_back(std::move(e.worst));
  }

  v.average = average_class(algorithm, config);
  v.series.push_back(fitted("best", std::move(best), config.tolerance));
  v.series.push_back(fitted("worst", std::move(worst), config.tolerance));
  v.series.push_back({"average", v.average.series(), v.average.fit});
  if (!searched_min.empty())
    v.series.push_back(fitted("searched_min", std::move(searched_min), config.tolerance));
  if (!searched_max.empty())
    v.series.push_back(fitted("searched_max", std::move(searched_max), config.tolerance));
  v.best_fit = v.series[0].fit;
  v.worst_fit = v.series[1].fit;
  v.samples.insert(v.samples.end(), v.average.samples.begin(), v.average.samples.end());

  if (v.best_fit.resolved && v.worst_fit.resolved &&
      !(v.worst_fit.growth < v.best_fit.growth)) {
    auto band = minimal_band(v.best_fit, v.worst_fit);
    band.minimal = v.witness_certified;
    v.band = band;
    v.homogeneous = v.best_fit.growth == v.worst_fit.growth;
  }
  return v;
}

}  // namespace complab
