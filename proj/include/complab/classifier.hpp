#pragma once

// Homogeneity verdicts. The best-case and worst-case cost series of an
// algorithm are fitted separately; equal classes mean the whole instance
// cost set sits in one growth class, different classes give a band between
// them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "complab/catalog.hpp"
#include "complab/experiment.hpp"
#include "complab/fitter.hpp"

namespace complab {

struct ComplexityBand {
  GrowthClass lower = GrowthClass::constant;
  GrowthClass upper = GrowthClass::constant;
  /// cost >= lower_constant * f(n) and cost <= upper_constant * g(n) for the
  /// extremal series at every sampled n >= n0.
  double lower_constant = 0.0;
  double upper_constant = 0.0;
  std::uint64_t n0 = 0;
  /// Both edges are attained by certified extremal instances.
  bool minimal = false;
};

/// Band spanned by the best-case and worst-case fits. Throws
/// std::invalid_argument if either fit is unresolved or the best-case class
/// exceeds the worst-case class.
ComplexityBand minimal_band(const FitResult& best_fit, const FitResult& worst_fit);

/// Whether the series lies in the band on its tail. Each side passes when
/// the tail respects the band's constant (widened by the tolerance) or, for
/// other constants, when the tail ratio against that side's class does not
/// drift past the tolerance in the forbidden direction (down against the
/// lower class, up against the upper class).
bool band_membership(const CostSeries& series, const ComplexityBand& band,
                     double tolerance);

struct GapPoint {
  std::uint64_t n = 0;
  /// Worst-case minus best-case comparison count.
  double comparisons = 0.0;
  /// The same difference under the study's weights.
  double total = 0.0;
};

struct AveragePoint {
  std::uint64_t n = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

/// Exact mean over every instance of size n next to the Monte Carlo estimate at that n.
struct ExactAveragePoint {
  std::uint64_t n = 0;
  std::size_t instances = 0;
  double exact_mean = 0.0;
  /// Exact means of the algorithm's event counters (iterations, swaps, ...).
  std::map<std::string, double> exact_metric_means;
  double monte_carlo_mean = 0.0;
  double monte_carlo_std_error = 0.0;
};

struct AverageResult {
  FitResult fit;
  std::vector<AveragePoint> by_n;
  std::vector<ExactAveragePoint> exact;
  std::vector<CostSample> samples;

  CostSeries series() const;
};

/// A named cost series together with its fit.
struct FittedSeries {
  std::string name;
  CostSeries series;
  FitResult fit;
};

struct Verdict {
  AlgorithmId algorithm = AlgorithmId::min;
  /// Empty when either extremal fit is unresolved or their classes are
  /// out of order.
  std::optional<bool> homogeneous;
  std::optional<ComplexityBand> band;
  FitResult best_fit;
  FitResult worst_fit;
  AverageResult average;
  std::vector<GapPoint> gap_by_n;
  /// Both extremal series come from certified witnesses.
  bool witness_certified = true;
  StudyConfig config;
  /// best, worst, average, plus searched_min / searched_max where search
  /// supplemented a heuristic witness.
  std::vector<FittedSeries> series;
  std::vector<CostSample> samples;

  bool inconclusive() const { return !homogeneous.has_value(); }
  const FittedSeries* find_series(std::string_view name) const;
};

/// Full study of one algorithm. Throws std::invalid_argument for an invalid
/// config and CounterOverflow if a tally wraps.
Verdict classify(AlgorithmId algorithm, const StudyConfig& config);

/// Mean cost over seeded random instances at each grid dimension, the exact
/// mean table for n = 2..8, and the fit of the mean series.
AverageResult average_class(AlgorithmId algorithm, const StudyConfig& config);

/// Exact mean over every instance of size n <= 8, of the total cost and each event counter.
ExactAveragePoint exact_average(AlgorithmId algorithm, std::size_t n,
                                const CostWeights& weights);

/// Worst-case minus best-case cost at one dimension.
GapPoint inhomogeneity_gap(AlgorithmId algorithm, std::uint64_t n,
                           const StudyConfig& config);

}  // namespace complab
