#pragma once

// Experiment parameters shared by the classifier and the command line, and
// the single table of their defaults.

#include <cstdint>
#include <string_view>
#include <vector>

#include "complab/catalog.hpp"
#include "complab/cost_model.hpp"

namespace complab {

enum class WeightPreset : std::uint8_t { all_ones, comparisons_only };

std::string_view to_string(WeightPreset preset);
/// Throws std::invalid_argument for unknown names.
WeightPreset parse_weight_preset(std::string_view name);
CostWeights weights_for(WeightPreset preset);

namespace defaults {
inline constexpr std::uint64_t kNMin = std::uint64_t{1} << 8;
inline constexpr std::uint64_t kNMax = std::uint64_t{1} << 19;
/// Grid for algorithms whose worst case is quadratic; the full grid would
/// take hours there.
inline constexpr std::uint64_t kQuadraticNMin = std::uint64_t{1} << 5;
inline constexpr std::uint64_t kQuadraticNMax = std::uint64_t{1} << 13;
inline constexpr std::size_t kPoints = 12;
inline constexpr std::size_t kTrials = 64;
inline constexpr double kTolerance = 0.15;
inline constexpr std::uint64_t kSeed = 20240601;
/// Runs per search when an extremal witness is heuristic.
inline constexpr std::uint64_t kSearchBudget = 32;
inline constexpr std::uint64_t kSearchRestarts = 2;
/// Largest n for the exact-average table.
inline constexpr std::size_t kExactMaxN = kMaxEnumerationN;
/// Environment variable that replaces kSeed when set.
inline constexpr std::string_view kSeedEnvVar = "COMPLAB_SEED";
}  // namespace defaults

struct StudyConfig {
  std::uint64_t n_min = defaults::kNMin;
  std::uint64_t n_max = defaults::kNMax;
  std::size_t points = defaults::kPoints;
  std::size_t trials = defaults::kTrials;
  double tolerance = defaults::kTolerance;
  std::uint64_t seed = defaults::kSeed;
  WeightPreset weights = WeightPreset::all_ones;
  std::uint64_t search_budget = defaults::kSearchBudget;
  std::uint64_t search_restarts = defaults::kSearchRestarts;

  /// Throws std::invalid_argument when a field is out of range or the grid
  /// cannot hold `points` distinct dimensions.
  void validate() const;

  bool operator==(const StudyConfig&) const = default;
};

/// Defaults for one algorithm: the reduced grid for quadratic worst cases,
/// the full grid otherwise.
StudyConfig default_study(AlgorithmId algorithm);

/// Whether default_study uses the reduced grid.
bool uses_quadratic_grid(AlgorithmId algorithm);

/// `points` dimensions spaced geometrically from n_min to n_max, rounded to
/// the nearest integer. Throws std::invalid_argument if rounding merges two
/// of them.
std::vector<std::uint64_t> geometric_grid(std::uint64_t n_min, std::uint64_t n_max,
                                          std::size_t points);

}  // namespace complab
