#include "complab/search.hpp"

#include <stdexcept>
#include <string>

#include "complab/detail/rng.hpp"

namespace complab {

namespace {

class Climber {
 public:
  Climber(AlgorithmId algorithm, std::size_t n, const SearchConfig& config)
      : algorithm_(algorithm), n_(n), config_(config), family_(family_of(algorithm)) {}

  // Propose a neighbor of `from`. Always in the instance space.
  Instance neighbor(const Instance& from, detail::Engine& rng) const {
    switch (family_) {
      case InstanceFamily::permutation: {
        auto data = from.data;
        if (config_.neighborhood == Neighborhood::adjacent_swap) {
          const auto i = detail::uniform_below(rng, n_ - 1);
          std::swap(data[i], data[i + 1]);
        } else {
          const auto i = detail::uniform_below(rng, n_);
          auto j = detail::uniform_below(rng, n_ - 1);
          if (j >= i) ++j;
          std::swap(data[i], data[j]);
        }
        return make_instance(algorithm_, n_, std::move(data));
      }
      case InstanceFamily::sorted_insert: {
        const auto rank = static_cast<std::int64_t>(insert_rank(from));
        const auto moved = step(rank, 0, static_cast<std::int64_t>(n_), rng);
        return make_instance(algorithm_, n_, from.data,
                             insert_key_for_rank(n_, static_cast<std::size_t>(moved)));
      }
      case InstanceFamily::sorted_search:
        return make_instance(algorithm_, n_, from.data,
                             step(*from.key, 1, static_cast<Value>(n_), rng));
      case InstanceFamily::integer_pair: {
        auto data = from.data;
        const auto which = detail::uniform_below(rng, 2);
        data[which] = step(data[which], 1, static_cast<Value>(n_), rng);
        return make_instance(algorithm_, n_, std::move(data));
      }
    }
    throw std::logic_error("unhandled instance family");
  }

  // Consecutive rejections treated as a local optimum.
  std::uint64_t patience() const {
    switch (family_) {
      case InstanceFamily::permutation:
        return config_.neighborhood == Neighborhood::adjacent_swap
                   ? n_ - 1
                   : static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
      case InstanceFamily::sorted_insert:
      case InstanceFamily::sorted_search:
        return 2;
      case InstanceFamily::integer_pair:
        return 4;
    }
    return 1;
  }

 private:
  // v moved by +-1 inside [lo, hi]; at an edge the move goes inward.
  static Value step(Value v, Value lo, Value hi, detail::Engine& rng) {
    const bool up = detail::uniform_below(rng, 2) == 1;
    if (up) return v < hi ? v + 1 : v - 1;
    return v > lo ? v - 1 : v + 1;
  }

  AlgorithmId algorithm_;
  std::size_t n_;
  const SearchConfig& config_;
  InstanceFamily family_;
};

void validate(AlgorithmId algorithm, std::size_t n, const SearchConfig& config) {
  if (n < 2) throw std::invalid_argument("dimension n must be at least 2");
  if (config.budget == 0) throw std::invalid_argument("search budget must be positive");
  if (config.restarts == 0) throw std::invalid_argument("restarts must be positive");
  if (config.budget < config.restarts)
    throw std::invalid_argument("search budget must be at least the number of restarts");
  const bool permutation = family_of(algorithm) == InstanceFamily::permutation;
  if (permutation == (config.neighborhood == Neighborhood::scalar_tweak))
    throw std::invalid_argument("neighborhood " +
                                std::string(to_string(config.neighborhood)) +
                                " does not apply to " +
                                std::string(to_string(algorithm)));
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::minimize ? "minimize" : "maximize";
}

std::string_view to_string(Neighborhood neighborhood) {
  switch (neighborhood) {
    case Neighborhood::adjacent_swap: return "adjacent_swap";
    case Neighborhood::random_swap: return "random_swap";
    case Neighborhood::scalar_tweak: return "scalar_tweak";
  }
  return "unknown";
}

SearchMode parse_search_mode(std::string_view name) {
  if (name == "minimize" || name == "min") return SearchMode::minimize;
  if (name == "maximize" || name == "max") return SearchMode::maximize;
  throw std::invalid_argument("unknown search mode '" + std::string(name) + "'");
}

Neighborhood parse_neighborhood(std::string_view name) {
  for (auto nb : {Neighborhood::adjacent_swap, Neighborhood::random_swap,
                  Neighborhood::scalar_tweak})
    if (to_string(nb) == name) return nb;
  throw std::invalid_argument("unknown neighborhood '" + std::string(name) + "'");
}

Neighborhood default_neighborhood(AlgorithmId algorithm) {
  return family_of(algorithm) == InstanceFamily::permutation
             ? Neighborhood::random_swap
             : Neighborhood::scalar_tweak;
}

SearchOutcome search_extremal(AlgorithmId algorithm, std::size_t n,
                              const SearchConfig& config) {
  validate(algorithm, n, config);
  const Climber climber(algorithm, n, config);
  const auto better = [&](double a, double b) {
    return config.mode == SearchMode::minimize ? a < b : a > b;
  };

  SearchOutcome out;
  bool have_best = false;
  std::uint64_t evaluations = 0;
  const auto evaluate = [&](const Instance& inst) {
    auto sample = run(algorithm, inst);
    sample.instance_kind = InstanceKind::searched;
    sample.seed = config.seed;
    const double cost = total(sample.counter, config.weights);
    ++evaluations;
    if (!have_best || better(cost, out.cost)) {
      have_best = true;
      out.instance = inst;
      out.sample = std::move(sample);
      out.cost = cost;
      out.trajectory.push_back({evaluations, cost});
    }
    return cost;
  };

  const std::uint64_t share = config.budget / config.restarts;
  const std::uint64_t extra = config.budget % config.restarts;
  for (std::uint64_t r = 0; r < config.restarts; ++r) {
    const std::uint64_t allowance = share + (r < extra ? 1 : 0);
    detail::Engine rng(derive_seed(config.seed, r, 0x6e6f6973ULL));
    std::uint64_t used = 0;
    std::uint64_t reseeds = 0;
    while (used < allowance) {
      Instance current = random_instance(algorithm, n, derive_seed(config.seed, r, reseeds++));
      double current_cost = evaluate(current);
      ++used;
      std::uint64_t rejected = 0;
      while (used < allowance && rejected < climber.patience()) {
        Instance candidate = climber.neighbor(current, rng);
        const double cost = evaluate(candidate);
        ++used;
        if (better(cost, current_cost)) {
          current = std::move(candidate);
          current_cost = cost;
          rejected = 0;
        } else {
          ++rejected;
        }
      }
    }
  }
  out.evaluations_used = evaluations;
  if (out.trajectory.back().evaluation != evaluations)
    out.trajectory.push_back({evaluations, out.cost});
  return out;
}

}  // namespace complab
