#include "complab/experiment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace complab {

std::string_view to_string(WeightPreset preset) {
  return preset == WeightPreset::all_ones ? "all_ones" : "comparisons_only";
}

WeightPreset parse_weight_preset(std::string_view name) {
  if (name == "all_ones") return WeightPreset::all_ones;
  if (name == "comparisons_only") return WeightPreset::comparisons_only;
  throw std::invalid_argument("unknown weight preset '" + std::string(name) + "'");
}

CostWeights weights_for(WeightPreset preset) {
  return preset == WeightPreset::all_ones ? CostWeights::all_ones()
                                          : CostWeights::comparisons_only();
}

void StudyConfig::validate() const {
  if (n_min < 2) throw std::invalid_argument("n-min must be at least 2");
  if (n_max / 4 < n_min) throw std::invalid_argument("n-max must be at least 4 * n-min");
  if (points < 8) throw std::invalid_argument("points must be at least 8");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(tolerance > 0.0 && tolerance < 1.0))
    throw std::invalid_argument("tolerance must lie in (0, 1)");
  if (search_budget < 1 || search_restarts < 1 || search_budget < search_restarts)
    throw std::invalid_argument("search budget must be at least the number of restarts (>= 1)");
  geometric_grid(n_min, n_max, points);
}

bool uses_quadratic_grid(AlgorithmId algorithm) {
  return algorithm == AlgorithmId::insertion_sort ||
         algorithm == AlgorithmId::quicksort_first_pivot;
}

StudyConfig default_study(AlgorithmId algorithm) {
  StudyConfig config;
  if (uses_quadratic_grid(algorithm)) {
    config.n_min = defaults::kQuadraticNMin;
    config.n_max = defaults::kQuadraticNMax;
  }
  return config;
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t n_min, std::uint64_t n_max,
                                          std::size_t points) {
  if (points < 2 || n_min < 1 || n_max <= n_min)
    throw std::invalid_argument("grid needs n-min < n-max and at least two points");
  std::vector<std::uint64_t> grid;
  grid.reserve(points);
  const double span = std::log(static_cast<double>(n_max) / static_cast<double>(n_min));
  for (std::size_t i = 0; i < points; ++i) {
    std::uint64_t n;
    if (i == 0) {
      n = n_min;
    } else if (i + 1 == points) {
      n = n_max;
    } else {
      const double t = static_cast<double>(i) / static_cast<double>(points - 1);
      n = static_cast<std::uint64_t>(std::llround(static_cast<double>(n_min) * std::exp(span * t)));
    }
    if (!grid.empty() && n <= grid.back())
      throw std::invalid_argument("range " + std::to_string(n_min) + ".." +
                                  std::to_string(n_max) + " cannot hold " +
                                  std::to_string(points) + " distinct dimensions");
    grid.push_back(n);
  }
  return grid;
}

}  // namespace complab
