#include "runners.hpp"

#include <algorithm>
#include <utility>

namespace complab::detail {

Value run_min(std::span<const Value> t, Tally& op, Metrics& m) {
  const std::size_t n = t.size();
  op.call();
  op.access();
  op.asg();
  Value a = t[0];
  op.asg();  // j <- 2
  std::size_t j = 1;
  for (;;) {
    op.ctl();
    if (j >= n) break;
    op.access();
    op.cmp();
    // The running minimum is always rewritten (select, not branch), so every
    // instance of dimension n executes the same operations.
    op.asg();
    a = t[j] < a ? t[j] : a;
    op.arith();
    op.asg();
    ++j;
  }
  m["iterations"] = n - 1;
  return a;
}

std::vector<Value> run_insert(std::span<const Value> t, Value x, Tally& op,
                              Metrics& m) {
  const std::size_t n = t.size();
  std::vector<Value> cells(t.begin(), t.end());
  cells.push_back(0);
  std::uint64_t guard_comparisons = 0;
  std::uint64_t swaps = 0;

  op.call();
  op.asg();
  std::size_t j = n;  // 1-based: T(j) lives at cells[j - 1]
  op.access();
  op.asg();
  cells[n] = x;  // T(n+1) <- x
  for (;;) {
    op.ctl();
    if (j < 1) break;
    op.access(2);
    op.cmp();
    ++guard_comparisons;
    if (!(cells[j - 1] > cells[j])) break;
    op.access(4);
    op.asg(3);
    std::swap(cells[j - 1], cells[j]);
    ++swaps;
    op.arith();
    op.asg();
    --j;
  }
  m["guard_comparisons"] = guard_comparisons;
  m["iterations"] = swaps;
  m["swaps"] = swaps;
  return cells;
}

void run_insertion_sort(std::span<Value> a, Tally& op, Metrics& m) {
  const std::size_t n = a.size();
  std::uint64_t shifts = 0;
  op.call();
  op.asg();
  std::size_t i = 1;
  for (;;) {
    op.ctl();
    if (i >= n) break;
    op.access();
    op.asg();
    const Value key = a[i];
    op.arith();
    op.asg();
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - 1;
    for (;;) {
      op.ctl();
      if (j < 0) break;
      op.access();
      op.cmp();
      if (!(a[j] > key)) break;
      op.access(2);
      op.asg();
      a[j + 1] = a[j];
      ++shifts;
      op.arith();
      op.asg();
      --j;
    }
    op.arith();
    op.access();
    op.asg();
    a[j + 1] = key;
    op.arith();
    op.asg();
    ++i;
  }
  m["shifts"] = shifts;
}

std::int64_t run_binary_search(std::span<const Value> a, Value key, Tally& op,
                               Metrics& m) {
  std::uint64_t probes = 0;
  std::int64_t found = -1;
  op.call();
  op.asg();
  std::int64_t lo = 0;
  op.arith();
  op.asg();
  std::int64_t hi = static_cast<std::int64_t>(a.size()) - 1;
  for (;;) {
    op.ctl();
    if (lo > hi) break;
    op.arith(3);
    op.asg();
    const std::int64_t mid = lo + (hi - lo) / 2;
    // One three-way comparison per probe, then a single dispatch.
    op.access();
    op.cmp();
    ++probes;
    const Value probe = a[static_cast<std::size_t>(mid)];
    op.ctl();
    if (probe == key) {
      found = mid;
      break;
    }
    op.arith();
    op.asg();
    if (probe < key) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  m["probes"] = probes;
  return found;
}

namespace {

struct MergeSorter {
  std::span<Value> a;
  std::vector<Value> scratch;
  Tally& op;
  std::uint64_t comparisons = 0;

  void sort(std::size_t lo, std::size_t hi) {
    op.call();
    op.arith();
    op.ctl();
    if (hi - lo <= 1) return;
    op.arith(3);
    op.asg();
    const std::size_t mid = lo + (hi - lo) / 2;
    sort(lo, mid);
    sort(mid, hi);
    merge(lo, mid, hi);
  }

  void copy_out(std::size_t from, std::size_t count) {
    for (std::size_t t = 0; t < count; ++t) {
      op.ctl();
      op.access(2);
      op.asg();
      op.arith();
      scratch[from + t] = a[from + t];
    }
    op.ctl();
  }

  void merge(std::size_t lo, std::size_t mid, std::size_t hi) {
    op.call();
    op.arith(2);
    op.asg(2);
    const std::size_t p = mid - lo;
    const std::size_t q = hi - mid;
    copy_out(lo, p);
    copy_out(mid, q);
    const Value* left = scratch.data() + lo;
    const Value* right = scratch.data() + mid;

    op.asg(3);
    std::size_t i = 0, j = 0, k = lo;
    // The compound guard is one control test per evaluation, so guard counts
    // sum to p + q + 3 whichever run is exhausted first.
    for (;;) {
      op.ctl();
      if (!(i < p && j < q)) break;
      op.access(2);
      op.cmp();
      ++comparisons;
      op.access(2);
      op.asg();
      if (left[i] <= right[j]) {
        a[k] = left[i];
        op.arith();
        op.asg();
        ++i;
      } else {
        a[k] = right[j];
        op.arith();
        op.asg();
        ++j;
      }
      op.arith();
      op.asg();
      ++k;
    }
    for (;;) {
      op.ctl();
      if (i >= p) break;
      op.access(2);
      op.asg();
      a[k] = left[i];
      op.arith(2);
      op.asg(2);
      ++i;
      ++k;
    }
    for (;;) {
      op.ctl();
      if (j >= q) break;
      op.access(2);
      op.asg();
      a[k] = right[j];
      op.arith(2);
      op.asg(2);
      ++j;
      ++k;
    }
  }
};

}  // namespace

void run_merge_sort(std::span<Value> a, Tally& op, Metrics& m) {
  MergeSorter sorter{a, std::vector<Value>(a.size()), op};
  sorter.sort(0, a.size());
  m["comparisons"] = sorter.comparisons;
}

void run_quicksort_first_pivot(std::span<Value> a, Tally& op, Metrics& m) {
  // Recursion is simulated with an explicit stack: sorted input drives the
  // depth to n. Each popped range is charged as one call.
  std::vector<std::pair<std::int64_t, std::int64_t>> pending;
  pending.emplace_back(0, static_cast<std::int64_t>(a.size()) - 1);
  std::vector<Value> less(a.size()), greater(a.size());
  std::uint64_t comparisons = 0, partitions = 0;

  const auto write_back = [&](const std::vector<Value>& from, std::size_t count,
                              std::size_t& k) {
    for (std::size_t t = 0; t < count; ++t) {
      op.ctl();
      op.access(2);
      op.asg();
      a[k] = from[t];
      op.arith(2);
      op.asg(2);
      ++k;
    }
    op.ctl();
  };

  while (!pending.empty()) {
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    op.call();
    op.arith();
    op.ctl();
    if (hi - lo + 1 <= 1) continue;
    ++partitions;

    // Stable three-buffer partition around the first element: every
    // non-pivot element costs the same whichever side it lands on.
    op.access();
    op.asg();
    const Value pivot = a[static_cast<std::size_t>(lo)];
    op.asg(2);
    std::size_t nl = 0, ng = 0;
    op.arith();
    op.asg();
    for (std::int64_t i = lo + 1;; ++i) {
      op.ctl();
      if (i > hi) break;
      op.access();
      op.cmp();
      ++comparisons;
      const Value v = a[static_cast<std::size_t>(i)];
      op.access();
      op.asg();
      op.arith();
      op.asg();
      if (v < pivot) {
        less[nl++] = v;
      } else {
        greater[ng++] = v;
      }
      op.arith();
      op.asg();
    }
    op.asg();
    std::size_t k = static_cast<std::size_t>(lo);
    write_back(less, nl, k);
    op.access();
    op.asg();
    a[k] = pivot;
    const auto p = static_cast<std::int64_t>(k);
    op.arith();
    op.asg();
    ++k;
    write_back(greater, ng, k);

    pending.emplace_back(p + 1, hi);
    pending.emplace_back(lo, p - 1);
  }
  m["comparisons"] = comparisons;
  m["partitions"] = partitions;
}

Value run_euclid_gcd(Value a, Value b, Tally& op, Metrics& m) {
  std::uint64_t iterations = 0;
  op.call();
  // Operands are ordered with a fixed-cost select so (a, b) and (b, a) cost
  // the same.
  op.cmp();
  op.asg(2);
  Value x = std::max(a, b);
  Value y = std::min(a, b);
  for (;;) {
    op.cmp();
    if (y == 0) break;
    op.arith();
    op.asg();
    const Value r = x % y;
    ++iterations;
    op.asg(2);
    x = y;
    y = r;
  }
  m["iterations"] = iterations;
  m["modulo_ops"] = iterations;
  return x;
}

namespace {

// Per-iteration charges of sift_down, mirrored by sift_path_costs.
constexpr std::uint64_t kSiftGuard = 1;           // child >= size
constexpr std::uint64_t kSiftRightTest = 2;       // child + 1 < size
constexpr std::uint64_t kSiftPickChild = 5;       // compare siblings, select
constexpr std::uint64_t kSiftParentTest = 3;      // compare parent, child
constexpr std::uint64_t kSiftDescend = 11;        // swap, advance i and child

std::uint64_t sift_down(std::span<Value> a, std::size_t i, std::size_t size,
                        Tally& op) {
  std::uint64_t swaps = 0;
  op.call();
  op.arith(2);
  op.asg();
  std::size_t child = 2 * i + 1;
  for (;;) {
    op.ctl();
    if (child >= size) break;
    op.arith();
    op.ctl();
    if (child + 1 < size) {
      op.access(2);
      op.cmp();
      op.arith();
      op.asg();
      child += a[child + 1] > a[child] ? 1 : 0;
    }
    op.access(2);
    op.cmp();
    if (!(a[i] < a[child])) break;
    op.access(4);
    op.asg(3);
    std::swap(a[i], a[child]);
    ++swaps;
    op.asg();
    i = child;
    op.arith(2);
    op.asg();
    child = 2 * i + 1;
  }
  return swaps;
}

std::uint64_t heapify(std::span<Value> a, Tally& op) {
  std::uint64_t swaps = 0;
  op.call();
  op.arith();
  op.asg();
  std::size_t i = a.size() / 2;
  for (;;) {
    op.ctl();
    if (i == 0) break;
    op.arith();
    op.asg();
    --i;
    swaps += sift_down(a, i, a.size(), op);
  }
  return swaps;
}

}  // namespace

std::vector<std::uint64_t> sift_path_costs(std::size_t n,
                                           std::vector<std::size_t>& next) {
  std::vector<std::uint64_t> down(n, 0);
  next.assign(n, n);
  for (std::size_t v = n; v-- > 0;) {
    const std::size_t left = 2 * v + 1;
    if (left >= n) {
      down[v] = kSiftGuard;
      continue;
    }
    std::uint64_t level = kSiftGuard + kSiftRightTest + kSiftParentTest + kSiftDescend;
    std::size_t pick = left;
    if (left + 1 < n) {
      level += kSiftPickChild;
      if (down[left + 1] > down[left]) pick = left + 1;
    }
    next[v] = pick;
    down[v] = level + down[pick];
  }
  return down;
}

void run_floyd_heapify(std::span<Value> a, Tally& op, Metrics& m) {
  m["swaps"] = heapify(a, op);
}

void run_heapsort(std::span<Value> a, Tally& op, Metrics& m) {
  std::uint64_t swaps = heapify(a, op);
  op.arith();
  op.asg();
  std::size_t end = a.size() - 1;
  for (;;) {
    op.ctl();
    if (end == 0) break;
    op.access(4);
    op.asg(3);
    std::swap(a[0], a[end]);
    swaps += sift_down(a, 0, end, op) + 1;
    op.arith();
    op.asg();
    --end;
  }
  m["swaps"] = swaps;
}

namespace {

struct MedianSelector {
  Tally& op;
  std::uint64_t comparisons = 0;
  std::uint64_t depth = 0;

  void small_sort(std::span<Value> a) {
    for (std::size_t i = 1; i < a.size(); ++i) {
      op.ctl();
      op.access();
      op.asg();
      const Value key = a[i];
      std::size_t j = i;
      for (;;) {
        op.ctl();
        if (j == 0) break;
        op.access();
        op.cmp();
        ++comparisons;
        if (!(a[j - 1] > key)) break;
        op.access(2);
        op.asg();
        a[j] = a[j - 1];
        op.arith();
        op.asg();
        --j;
      }
      op.access();
      op.asg();
      a[j] = key;
    }
    op.ctl();
  }

  Value select(std::vector<Value> a, std::size_t k, std::uint64_t level) {
    op.call();
    depth = std::max(depth, level);
    op.ctl();
    if (a.size() <= 5) {
      small_sort(a);
      op.access();
      return a[k];
    }

    std::vector<Value> medians;
    medians.reserve(a.size() / 5 + 1);
    for (std::size_t g = 0; g < a.size(); g += 5) {
      op.ctl();
      op.arith(2);
      const std::size_t len = std::min<std::size_t>(5, a.size() - g);
      small_sort(std::span<Value>(a).subspan(g, len));
      op.arith(2);
      op.access(2);
      op.asg();
      medians.push_back(a[g + (len - 1) / 2]);
    }
    op.ctl();
    op.arith(2);
    const Value pivot = select(medians, (medians.size() - 1) / 2, level + 1);

    std::vector<Value> lower, upper;
    std::size_t equal = 0;
    for (const Value v : a) {
      op.ctl();
      op.access();
      op.cmp();
      ++comparisons;
      if (v < pivot) {
        op.access();
        op.asg();
        lower.push_back(v);
        continue;
      }
      op.cmp();
      ++comparisons;
      if (v > pivot) {
        op.access();
        op.asg();
        upper.push_back(v);
      } else {
        op.arith();
        op.asg();
        ++equal;
      }
    }
    op.ctl();

    op.ctl();
    if (k < lower.size()) return select(std::move(lower), k, level + 1);
    op.arith();
    op.ctl();
    if (k < lower.size() + equal) return pivot;
    op.arith(2);
    return select(std::move(upper), k - lower.size() - equal, level + 1);
  }
};

}  // namespace

Value run_select_median_of_medians(std::span<const Value> a, std::size_t k,
                                   Tally& op, Metrics& m) {
  MedianSelector selector{op};
  // The working copy is charged as n reads and n writes.
  op.access(2 * a.size());
  op.asg(a.size());
  const Value result =
      selector.select(std::vector<Value>(a.begin(), a.end()), k, 0);
  m["comparisons"] = selector.comparisons;
  m["recursion_depth"] = selector.depth;
  return result;
}

}  // namespace complab::detail
