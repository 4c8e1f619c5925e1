#pragma once

// Stochastic local search for cheap and expensive instances, used where no
// exact extremal generator is known.

#include <cstdint>
#include <string_view>
#include <vector>

#include "complab/catalog.hpp"
#include "complab/cost_model.hpp"

namespace complab {

enum class SearchMode : std::uint8_t { minimize, maximize };

enum class Neighborhood : std::uint8_t {
  adjacent_swap,  // permutations: swap positions i and i+1
  random_swap,    // permutations: swap two distinct positions
  scalar_tweak,   // keyed and pair instances: move one scalar by +-1
};

std::string_view to_string(SearchMode mode);
std::string_view to_string(Neighborhood neighborhood);
/// Both accept the report identifiers ("min"/"max" are aliases for the
/// modes) and throw std::invalid_argument otherwise.
SearchMode parse_search_mode(std::string_view name);
Neighborhood parse_neighborhood(std::string_view name);

/// random_swap for permutations, scalar_tweak for everything else.
Neighborhood default_neighborhood(AlgorithmId algorithm);

struct SearchConfig {
  SearchMode mode = SearchMode::maximize;
  /// Total number of algorithm runs, split evenly across restarts.
  std::uint64_t budget = 1000;
  std::uint64_t restarts = 4;
  std::uint64_t seed = 0;
  Neighborhood neighborhood = Neighborhood::random_swap;
  CostWeights weights;
};

struct TrajectoryPoint {
  std::uint64_t evaluation = 0;  // 1-based index of the run
  double best_cost = 0.0;
};

struct SearchOutcome {
  Instance instance;
  CostSample sample;
  double cost = 0.0;
  std::uint64_t evaluations_used = 0;
  /// Best-so-far after each improvement, then after the final evaluation.
  std::vector<TrajectoryPoint> trajectory;
};

/// Hill climbing with restarts over the canonical instance space. Each
/// restart begins at a seeded random instance and accepts strictly better
/// neighbors only; after a run of rejected moves as long as the neighborhood
/// it reseeds from a fresh random instance. Deterministic in config.seed.
///
/// Throws std::invalid_argument for n < 2, a zero budget, fewer evaluations
/// than restarts, or a neighborhood that does not fit the instance family.
SearchOutcome search_extremal(AlgorithmId algorithm, std::size_t n,
                              const SearchConfig& config);

}  // namespace complab
