#include "complab/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "complab/detail/rng.hpp"
#include "runners.hpp"

namespace complab {

namespace {

constexpr std::array<std::string_view, kAlgorithmCount> kAlgorithmNames = {
    "min",        "insert",
    "insertion_sort", "binary_search",
    "merge_sort", "quicksort_first_pivot",
    "euclid_gcd", "floyd_heapify",
    "heapsort",   "select_median_of_medians"};

std::vector<Value> iota_values(std::size_t n) {
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  return v;
}

bool is_identity(const std::vector<Value>& data) {
  for (std::size_t i = 0; i < data.size(); ++i)
    if (data[i] != static_cast<Value>(i + 1)) return false;
  return true;
}

void require_dimension(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dimension n must be at least 2");
}

void check_sorted_output(const std::vector<Value>& input,
                         std::span<const Value> output, AlgorithmId id) {
  std::vector<Value> expected = input;
  std::sort(expected.begin(), expected.end());
  if (!std::equal(expected.begin(), expected.end(), output.begin(),
                  output.end()))
    throw std::logic_error(std::string(to_string(id)) +
                           ": output is not the sorted input");
}

}  // namespace

const std::vector<AlgorithmId>& all_algorithms() {
  static const std::vector<AlgorithmId> ids = [] {
    std::vector<AlgorithmId> v;
    for (std::size_t i = 0; i < kAlgorithmCount; ++i)
      v.push_back(static_cast<AlgorithmId>(i));
    return v;
  }();
  return ids;
}

std::string_view to_string(AlgorithmId id) {
  return kAlgorithmNames.at(static_cast<std::size_t>(id));
}

AlgorithmId parse_algorithm(std::string_view name) {
  for (std::size_t i = 0; i < kAlgorithmCount; ++i)
    if (kAlgorithmNames[i] == name) return static_cast<AlgorithmId>(i);
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::best_witness: return "best_witness";
    case InstanceKind::worst_witness: return "worst_witness";
    case InstanceKind::random: return "random";
    case InstanceKind::searched: return "searched";
    case InstanceKind::enumerated: return "enumerated";
  }
  return "unknown";
}

InstanceFamily family_of(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::insert: return InstanceFamily::sorted_insert;
    case AlgorithmId::binary_search: return InstanceFamily::sorted_search;
    case AlgorithmId::euclid_gcd: return InstanceFamily::integer_pair;
    default: return InstanceFamily::permutation;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t h = detail::splitmix64(base);
  h = detail::splitmix64(h ^ a);
  h = detail::splitmix64(h ^ b);
  return detail::splitmix64(h ^ c);
}

Value insert_key_for_rank(std::size_t n, std::size_t rank) {
  if (rank > n) throw std::invalid_argument("insertion rank exceeds n");
  return rank == 0 ? static_cast<Value>(n + 1) : static_cast<Value>(n - rank);
}

std::size_t insert_rank(const Instance& instance) {
  const Value x = instance.key.value();
  return static_cast<std::size_t>(std::count_if(
      instance.data.begin(), instance.data.end(),
      [x](Value v) { return v > x; }));
}

Instance make_instance(AlgorithmId algorithm, std::size_t n,
                       std::vector<Value> data, std::optional<Value> key) {
  if (n < 1) throw std::invalid_argument("dimension n must be positive");
  const std::string tag(to_string(algorithm));
  switch (family_of(algorithm)) {
    case InstanceFamily::permutation: {
      std::vector<Value> sorted = data;
      std::sort(sorted.begin(), sorted.end());
      if (data.size() != n || !is_identity(sorted))
        throw RejectedInstance(tag + ": data must be a permutation of 1..n");
      if (key) throw RejectedInstance(tag + ": takes no scalar key");
      return Instance{std::move(data), std::nullopt, "permutation", n};
    }
    case InstanceFamily::sorted_insert:
      if (data.size() != n || !is_identity(data))
        throw RejectedInstance(tag + ": data must be the sorted array 1..n");
      if (!key || *key < 0 || *key > static_cast<Value>(n + 1))
        throw RejectedInstance(tag + ": key must lie in [0, n+1]");
      return Instance{std::move(data), key, "sorted_with_key", n};
    case InstanceFamily::sorted_search:
      if (data.size() != n || !is_identity(data))
        throw RejectedInstance(tag + ": data must be the sorted array 1..n");
      if (!key || *key < 1 || *key > static_cast<Value>(n))
        throw RejectedInstance(tag + ": key must lie in [1, n]");
      return Instance{std::move(data), key, "sorted_search", n};
    case InstanceFamily::integer_pair:
      if (data.size() != 2 || data[0] < 1 || data[1] < 1 ||
          data[0] > static_cast<Value>(n) || data[1] > static_cast<Value>(n))
        throw RejectedInstance(tag + ": operands must lie in [1, n]");
      if (key) throw RejectedInstance(tag + ": takes no scalar key");
      return Instance{std::move(data), std::nullopt, "integer_pair", n};
  }
  throw std::logic_error("unhandled instance family");
}

CostSample run(AlgorithmId algorithm, const Instance& instance) {
  CostSample sample;
  sample.algorithm = algorithm;
  sample.n = instance.n;
  detail::Tally op(sample.counter);
  auto& metrics = sample.metrics;
  const std::string tag(to_string(algorithm));
  const auto& data = instance.data;

  const auto require_sorted_with_key = [&] {
    if (!std::is_sorted(data.begin(), data.end()))
      throw RejectedInstance(tag + ": input array must be sorted");
    if (!instance.key) throw RejectedInstance(tag + ": missing scalar key");
  };
  const auto require_nonempty = [&] {
    if (data.empty()) throw RejectedInstance(tag + ": empty input");
  };

  switch (algorithm) {
    case AlgorithmId::min: {
      require_nonempty();
      const Value got = detail::run_min(data, op, metrics);
      if (got != *std::min_element(data.begin(), data.end()))
        throw std::logic_error("min: wrong minimum");
      break;
    }
    case AlgorithmId::insert: {
      require_sorted_with_key();
      const auto out = detail::run_insert(data, *instance.key, op, metrics);
      std::vector<Value> input = data;
      input.push_back(*instance.key);
      check_sorted_output(input, out, algorithm);
      break;
    }
    case AlgorithmId::binary_search: {
      require_nonempty();
      require_sorted_with_key();
      const auto idx =
          detail::run_binary_search(data, *instance.key, op, metrics);
      const bool present =
          std::binary_search(data.begin(), data.end(), *instance.key);
      if (present ? (idx < 0 || data[static_cast<std::size_t>(idx)] !=
                                    *instance.key)
                  : idx >= 0)
        throw std::logic_error("binary_search: wrong position");
      break;
    }
    case AlgorithmId::euclid_gcd: {
      if (data.size() != 2 || data[0] < 1 || data[1] < 1)
        throw RejectedInstance(tag + ": expects two positive operands");
      const Value g = detail::run_euclid_gcd(data[0], data[1], op, metrics);
      if (g != std::gcd(data[0], data[1]))
        throw std::logic_error("euclid_gcd: wrong gcd");
      break;
    }
    case AlgorithmId::floyd_heapify: {
      require_nonempty();
      std::vector<Value> a = data;
      detail::run_floyd_heapify(a, op, metrics);
      if (!std::is_heap(a.begin(), a.end()))
        throw std::logic_error("floyd_heapify: result is not a max-heap");
      std::sort(a.begin(), a.end());
      check_sorted_output(data, a, algorithm);
      break;
    }
    case AlgorithmId::select_median_of_medians: {
      require_nonempty();
      const std::size_t k = (data.size() - 1) / 2;
      const Value got =
          detail::run_select_median_of_medians(data, k, op, metrics);
      std::vector<Value> ref = data;
      std::nth_element(ref.begin(), ref.begin() + static_cast<std::ptrdiff_t>(k),
                       ref.end());
      if (got != ref[k])
        throw std::logic_error("select_median_of_medians: wrong order statistic");
      break;
    }
    case AlgorithmId::insertion_sort:
    case AlgorithmId::merge_sort:
    case AlgorithmId::quicksort_first_pivot:
    case AlgorithmId::heapsort: {
      require_nonempty();
      std::vector<Value> a = data;
      if (algorithm == AlgorithmId::insertion_sort)
        detail::run_insertion_sort(a, op, metrics);
      else if (algorithm == AlgorithmId::merge_sort)
        detail::run_merge_sort(a, op, metrics);
      else if (algorithm == AlgorithmId::quicksort_first_pivot)
        detail::run_quicksort_first_pivot(a, op, metrics);
      else
        detail::run_heapsort(a, op, metrics);
      check_sorted_output(data, a, algorithm);
      break;
    }
  }
  return sample;
}

Instance random_instance(AlgorithmId algorithm, std::size_t n,
                         std::uint64_t seed) {
  require_dimension(n);
  detail::Engine rng(seed);
  switch (family_of(algorithm)) {
    case InstanceFamily::permutation: {
      auto data = iota_values(n);
      for (std::size_t i = n - 1; i > 0; --i)
        std::swap(data[i], data[detail::uniform_below(rng, i + 1)]);
      return make_instance(algorithm, n, std::move(data));
    }
    case InstanceFamily::sorted_insert: {
      const auto rank = detail::uniform_below(rng, n + 1);
      return make_instance(algorithm, n, iota_values(n),
                           insert_key_for_rank(n, rank));
    }
    case InstanceFamily::sorted_search: {
      const auto key = static_cast<Value>(detail::uniform_below(rng, n) + 1);
      return make_instance(algorithm, n, iota_values(n), key);
    }
    case InstanceFamily::integer_pair: {
      const auto a = static_cast<Value>(detail::uniform_below(rng, n) + 1);
      const auto b = static_cast<Value>(detail::uniform_below(rng, n) + 1);
      return make_instance(algorithm, n, {a, b});
    }
  }
  throw std::logic_error("unhandled instance family");
}

std::vector<Instance> enumerate_instances(AlgorithmId algorithm, std::size_t n) {
  if (n > kMaxEnumerationN)
    throw EnumerationTooLarge("exhaustive enumeration is limited to n <= " +
                              std::to_string(kMaxEnumerationN) + ", got n = " +
                              std::to_string(n));
  if (n < 1) throw std::invalid_argument("dimension n must be positive");
  std::vector<Instance> out;
  switch (family_of(algorithm)) {
    case InstanceFamily::permutation: {
      auto data = iota_values(n);
      do {
        out.push_back(make_instance(algorithm, n, data));
      } while (std::next_permutation(data.begin(), data.end()));
      break;
    }
    case InstanceFamily::sorted_insert:
      for (std::size_t rank = 0; rank <= n; ++rank)
        out.push_back(make_instance(algorithm, n, iota_values(n),
                                    insert_key_for_rank(n, rank)));
      break;
    case InstanceFamily::sorted_search:
      for (std::size_t key = 1; key <= n; ++key)
        out.push_back(make_instance(algorithm, n, iota_values(n),
                                    static_cast<Value>(key)));
      break;
    case InstanceFamily::integer_pair:
      for (Value a = 1; a <= static_cast<Value>(n); ++a)
        for (Value b = 1; b <= static_cast<Value>(n); ++b)
          out.push_back(make_instance(algorithm, n, {a, b}));
      break;
  }
  return out;
}

}  // namespace complab
