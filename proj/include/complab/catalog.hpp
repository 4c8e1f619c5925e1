#pragma once

// Instrumented reference algorithms, their extremal-instance generators, and
// the canonical finite instance spaces they are run on.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "complab/cost_model.hpp"

namespace complab {

using Value = std::int64_t;

enum class AlgorithmId : std::uint8_t {
  min,
  insert,
  insertion_sort,
  binary_search,
  merge_sort,
  quicksort_first_pivot,
  euclid_gcd,
  floyd_heapify,
  heapsort,
  select_median_of_medians,
};

inline constexpr std::size_t kAlgorithmCount = 10;

const std::vector<AlgorithmId>& all_algorithms();
std::string_view to_string(AlgorithmId id);
/// Throws std::invalid_argument for unknown names.
AlgorithmId parse_algorithm(std::string_view name);

/// Shape of the canonical instance space of an algorithm.
enum class InstanceFamily : std::uint8_t {
  permutation,    // data is a permutation of 1..n
  sorted_insert,  // data = [1..n], key = x over n+1 insertion ranks
  sorted_search,  // data = [1..n], key in 1..n
  integer_pair,   // data = [a, b] with 1 <= a, b <= n
};

InstanceFamily family_of(AlgorithmId id);

struct Instance {
  std::vector<Value> data;
  std::optional<Value> key;
  std::string domain_tag;
  /// Declared dimension: data.size() except for integer pairs, where it is
  /// the largest admissible operand magnitude.
  std::size_t n = 0;

  bool operator==(const Instance&) const = default;
};

enum class InstanceKind : std::uint8_t {
  best_witness,
  worst_witness,
  random,
  searched,
  enumerated,
};

std::string_view to_string(InstanceKind kind);

struct CostSample {
  AlgorithmId algorithm = AlgorithmId::min;
  std::size_t n = 0;
  InstanceKind instance_kind = InstanceKind::random;
  CostCounter counter;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trial;
  /// Algorithm-level event counts (swaps, loop iterations, probes, ...).
  std::map<std::string, std::uint64_t> metrics;
};

/// The instance violates the algorithm's input contract.
class RejectedInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration was requested above the factorial guard.
class EnumerationTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest n accepted by enumerate_instances.
inline constexpr std::size_t kMaxEnumerationN = 8;

/// Executes the instrumented algorithm and returns its exact tallies. The
/// functional result is checked before the sample is returned; a failed check
/// throws std::logic_error.
CostSample run(AlgorithmId algorithm, const Instance& instance);

/// Whether the generator for the given side is proven extremal under
/// all-ones weights. Uncertified generators return documented heuristics.
bool best_witness_certified(AlgorithmId algorithm);
bool worst_witness_certified(AlgorithmId algorithm);

Instance best_witness(AlgorithmId algorithm, std::size_t n);
Instance worst_witness(AlgorithmId algorithm, std::size_t n);

/// Uniform draw from the canonical instance space, deterministic in `seed`.
Instance random_instance(AlgorithmId algorithm, std::size_t n,
                         std::uint64_t seed);

/// Every instance of the canonical space exactly once, n <= kMaxEnumerationN.
std::vector<Instance> enumerate_instances(AlgorithmId algorithm, std::size_t n);

/// Builds an instance of the algorithm's family from raw values, checking
/// domain membership. Used by search moves and tests.
Instance make_instance(AlgorithmId algorithm, std::size_t n,
                       std::vector<Value> data, std::optional<Value> key = {});

/// For sorted_insert instances: number of elements x must move past.
std::size_t insert_rank(const Instance& instance);
/// The key value realizing insertion rank `rank` in [0, n].
Value insert_key_for_rank(std::size_t n, std::size_t rank);

/// SplitMix64-based mixing of a base seed with stream coordinates.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                          std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace complab
