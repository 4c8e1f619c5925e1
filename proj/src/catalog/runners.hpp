#pragma once

// Instrumented runners. Each takes the instance payload, charges every
// elementary step to the counter, and returns the functional result together
// with algorithm-level metrics. Output checking lives in catalog.cpp.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "complab/catalog.hpp"
#include "complab/cost_model.hpp"

namespace complab::detail {

class Tally {
 public:
  explicit Tally(CostCounter& counter) : counter_(counter) {}

  void cmp(std::uint64_t k = 1) { counter_.charge(OpKind::comparison, k); }
  void asg(std::uint64_t k = 1) { counter_.charge(OpKind::assignment, k); }
  void arith(std::uint64_t k = 1) { counter_.charge(OpKind::arithmetic, k); }
  void access(std::uint64_t k = 1) { counter_.charge(OpKind::array_access, k); }
  void call(std::uint64_t k = 1) { counter_.charge(OpKind::call, k); }
  void ctl(std::uint64_t k = 1) { counter_.charge(OpKind::other, k); }

 private:
  CostCounter& counter_;
};

using Metrics = std::map<std::string, std::uint64_t>;

Value run_min(std::span<const Value> t, Tally& op, Metrics& m);
std::vector<Value> run_insert(std::span<const Value> t, Value x, Tally& op,
                              Metrics& m);
void run_insertion_sort(std::span<Value> a, Tally& op, Metrics& m);
/// Index of `key` in `a`, or -1.
std::int64_t run_binary_search(std::span<const Value> a, Value key, Tally& op,
                               Metrics& m);
void run_merge_sort(std::span<Value> a, Tally& op, Metrics& m);
void run_quicksort_first_pivot(std::span<Value> a, Tally& op, Metrics& m);
Value run_euclid_gcd(Value a, Value b, Tally& op, Metrics& m);
void run_floyd_heapify(std::span<Value> a, Tally& op, Metrics& m);
void run_heapsort(std::span<Value> a, Tally& op, Metrics& m);
/// k-th smallest (0-based) of `a`.
Value run_select_median_of_medians(std::span<const Value> a, std::size_t k,
                                   Tally& op, Metrics& m);

/// Per-node cost, under all-ones weights, of a sift-down that follows the
/// costliest root-to-leaf path; `next` receives the chosen child per node
/// (or n for leaves). Shared by the Floyd witness generator and its tests.
std::vector<std::uint64_t> sift_path_costs(std::size_t n,
                                           std::vector<std::size_t>& next);

}  // namespace complab::detail
