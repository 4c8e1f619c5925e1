#include <bit>
#include <numeric>

#include "complab/catalog.hpp"
#include "runners.hpp"

// Extremal-instance constructors. Certified generators are exact under
// all-ones weights; the tests confirm each against exhaustive enumeration
// for n <= 8.

namespace complab {

namespace {

std::vector<Value> ascending(std::size_t n) {
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  return v;
}

std::vector<Value> descending(std::size_t n) {
  auto v = ascending(n);
  std::reverse(v.begin(), v.end());
  return v;
}

// Top-down merge sort splits k into k/2 + (k - k/2). Interleaving the sorted
// values across the halves forces every merge to compare until one element
// remains, the maximum p + q - 1 comparisons at every node.
void merge_worst_into(std::span<const Value> values, std::vector<Value>& out) {
  const std::size_t k = values.size();
  if (k <= 1) {
    out.insert(out.end(), values.begin(), values.end());
    return;
  }
  std::vector<Value> left, right;
  for (std::size_t i = 0; i < k; ++i) (i % 2 == 1 ? left : right).push_back(values[i]);
  merge_worst_into(left, out);
  merge_worst_into(right, out);
}

// Size of the left subtree of a left-justified complete binary tree with k
// nodes.
std::size_t complete_tree_left_size(std::size_t k) {
  if (k <= 1) return 0;
  const std::size_t h = std::bit_width(k) - 1;  // depth of the last level
  const std::size_t full = (std::size_t{1} << h) - 1;
  const std::size_t last = k - full;
  const std::size_t half = std::size_t{1} << (h - 1);
  return (half - 1) + std::min(last, half);
}

// First-pivot quicksort with a stable partition keeps each side in input
// order, so emitting [pivot, left..., right...] reproduces any chosen
// recursion tree. A complete tree minimizes both the comparison total
// (internal path length) and the number of partitioning calls.
void quicksort_best_into(Value lo, std::size_t k, std::vector<Value>& out) {
  if (k == 0) return;
  const std::size_t left = complete_tree_left_size(k);
  const Value pivot = lo + static_cast<Value>(left);
  out.push_back(pivot);
  quicksort_best_into(lo, left, out);
  quicksort_best_into(pivot + 1, k - 1 - left, out);
}

// Start from a heap and undo Floyd's sift-downs root-first, each along the
// costliest path to a leaf. Running Floyd forward then sends every sift down
// exactly that path, which bounds every sift's cost from above.
std::vector<Value> floyd_worst(std::size_t n) {
  std::vector<std::size_t> next;
  detail::sift_path_costs(n, next);
  std::vector<Value> a = descending(n);
  std::vector<std::size_t> path;
  for (std::size_t v = 0; v < n / 2; ++v) {
    path.clear();
    for (std::size_t u = v; u < n; u = next[u]) path.push_back(u);
    const Value leaf_value = a[path.back()];
    for (std::size_t i = path.size() - 1; i > 0; --i) a[path[i]] = a[path[i - 1]];
    a[path.front()] = leaf_value;
  }
  return a;
}

// Heuristic cheap instance for median-of-medians selection of the lower
// median: every group of five arrives sorted, the medians are themselves
// arranged this way, and the median of medians is the target, so each level
// returns after a single partition. Returns ranks 1..m.
std::vector<Value> select_cheap(std::size_t m) {
  if (m <= 5) return ascending(m);
  const std::size_t groups = (m + 4) / 5;
  const auto pivot = static_cast<Value>((m - 1) / 2 + 1);
  const auto median_order = select_cheap(groups);  // rank of each group's median
  const std::size_t pivot_rank = (groups - 1) / 2 + 1;
  const auto low_groups = static_cast<Value>(pivot_rank - 1);
  const auto high_groups = static_cast<Value>(groups - pivot_rank);
  const auto group_len = [&](std::size_t j) {
    return j + 1 < groups ? std::size_t{5} : m - 5 * (groups - 1);
  };

  Value below_slots = 0;
  for (std::size_t j = 0; j < groups; ++j) below_slots += static_cast<Value>((group_len(j) - 1) / 2);
  // Lows left after the low medians, against slots that must sit below a
  // median. A surplus spills into the upper slots of low groups, a deficit is
  // covered by highs placed under the high medians.
  const Value surplus = (pivot - 1 - low_groups) - below_slots;
  const Value spill_up = std::max<Value>(surplus, 0);
  const Value spill_down = std::max<Value>(-surplus, 0);

  const Value low_median_base = pivot - low_groups - spill_up;
  const Value high_median_base = pivot + spill_down + 1;
  Value next_low = 1;                         // [1, low_median_base)
  Value next_spill_up = pivot - spill_up;     // [pivot - spill_up, pivot)
  Value next_spill_down = pivot + 1;          // [pivot + 1, high_median_base)
  Value next_high = high_median_base + high_groups;  // up to m
  if (low_median_base < 1) return ascending(m);

  std::vector<Value> out;
  out.reserve(m);
  for (std::size_t j = 0; j < groups; ++j) {
    const std::size_t len = group_len(j);
    const std::size_t mid = (len - 1) / 2;
    const auto rank = static_cast<Value>(median_order[j]);
    const auto pr = static_cast<Value>(pivot_rank);
    const Value median = rank < pr    ? low_median_base + rank - 1
                         : rank == pr ? pivot
                                      : high_median_base + rank - pr - 1;
    for (std::size_t s = 0; s < mid; ++s) {
      if (rank > pr && next_spill_down < high_median_base)
        out.push_back(next_spill_down++);
      else
        out.push_back(next_low++);
    }
    out.push_back(median);
    for (std::size_t s = mid + 1; s < len; ++s) {
      if (rank < pr && next_spill_up < pivot)
        out.push_back(next_spill_up++);
      else
        out.push_back(next_high++);
    }
  }
  const bool consumed = next_low == low_median_base && next_spill_up == pivot &&
                        next_spill_down == high_median_base &&
                        next_high == static_cast<Value>(m + 1);
  return consumed ? out : ascending(m);
}

std::pair<Value, Value> largest_fibonacci_pair(std::size_t n) {
  Value smaller = 1, larger = 2;
  while (larger + smaller <= static_cast<Value>(n)) {
    const Value next = larger + smaller;
    smaller = larger;
    larger = next;
  }
  return {larger, smaller};
}

void require_dimension(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dimension n must be at least 2");
}

}  // namespace

bool best_witness_certified(AlgorithmId algorithm) {
  return algorithm != AlgorithmId::heapsort &&
         algorithm != AlgorithmId::select_median_of_medians;
}

bool worst_witness_certified(AlgorithmId algorithm) {
  return best_witness_certified(algorithm);
}

Instance best_witness(AlgorithmId algorithm, std::size_t n) {
  require_dimension(n);
  switch (algorithm) {
    case AlgorithmId::min:
    case AlgorithmId::insertion_sort:
    case AlgorithmId::merge_sort:
      return make_instance(algorithm, n, ascending(n));
    case AlgorithmId::insert:
      return make_instance(algorithm, n, ascending(n), insert_key_for_rank(n, 0));
    case AlgorithmId::binary_search:
      // First probe lands on index (n - 1) / 2.
      return make_instance(algorithm, n, ascending(n),
                           static_cast<Value>((n - 1) / 2 + 1));
    case AlgorithmId::quicksort_first_pivot: {
      std::vector<Value> data;
      data.reserve(n);
      quicksort_best_into(1, n, data);
      return make_instance(algorithm, n, std::move(data));
    }
    case AlgorithmId::euclid_gcd: {
      const auto v = static_cast<Value>(n);
      return make_instance(algorithm, n, {v, v});
    }
    case AlgorithmId::floyd_heapify:
    case AlgorithmId::heapsort:  // heuristic: the input is already a heap
      return make_instance(algorithm, n, descending(n));
    case AlgorithmId::select_median_of_medians:  // heuristic
      return make_instance(algorithm, n, select_cheap(n));
  }
  throw std::logic_error("unhandled algorithm");
}

Instance worst_witness(AlgorithmId algorithm, std::size_t n) {
  require_dimension(n);
  switch (algorithm) {
    case AlgorithmId::min:
    case AlgorithmId::quicksort_first_pivot:
      return make_instance(algorithm, n, ascending(n));
    case AlgorithmId::insertion_sort:
      return make_instance(algorithm, n, descending(n));
    case AlgorithmId::insert:
      return make_instance(algorithm, n, ascending(n), insert_key_for_rank(n, n));
    case AlgorithmId::binary_search:
      // The rightmost path of the implicit search tree is a longest one.
      return make_instance(algorithm, n, ascending(n), static_cast<Value>(n));
    case AlgorithmId::merge_sort: {
      const auto values = ascending(n);
      std::vector<Value> data;
      data.reserve(n);
      merge_worst_into(values, data);
      return make_instance(algorithm, n, std::move(data));
    }
    case AlgorithmId::euclid_gcd: {
      const auto [a, b] = largest_fibonacci_pair(n);
      return make_instance(algorithm, n, {a, b});
    }
    case AlgorithmId::floyd_heapify:
    case AlgorithmId::heapsort:  // heuristic: worst build phase
      return make_instance(algorithm, n, floyd_worst(n));
    case AlgorithmId::select_median_of_medians:  // heuristic
      return make_instance(algorithm, n, descending(n));
  }
  throw std::logic_error("unhandled algorithm");
}

}  // namespace complab
