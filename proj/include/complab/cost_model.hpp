#pragma once

// Elementary-operation accounting for the RAM machine model.
//
// Every instrumented algorithm charges each primitive step to exactly one
// OpKind. The conventions used across the catalog:
//   comparison   - a test between two data values (T(j) > x, b != 0, ...)
//   assignment   - a write to a variable or array cell
//   arithmetic   - +, -, *, /, mod, including index arithmetic
//   array_access - a read or write addressing an array element
//   call         - a function invocation (including simulated recursion)
//   other        - control-flow tests on loop indices and branch dispatch

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace complab {

enum class OpKind : std::uint8_t {
  comparison = 0,
  assignment,
  arithmetic,
  array_access,
  call,
  other,
};

inline constexpr std::size_t kOpKindCount = 6;

inline constexpr std::array<OpKind, kOpKindCount> kAllOpKinds = {
    OpKind::comparison, OpKind::assignment, OpKind::arithmetic,
    OpKind::array_access, OpKind::call, OpKind::other};

std::string_view to_string(OpKind kind);

/// Raised when a tally would exceed the 64-bit counter range.
class CounterOverflow : public std::overflow_error {
 public:
  explicit CounterOverflow(OpKind kind);
  OpKind kind() const noexcept { return kind_; }

 private:
  OpKind kind_;
};

/// Per-kind multipliers applied when collapsing a counter to one cost figure.
class CostWeights {
 public:
  /// All-ones: the plain elementary-operation count.
  CostWeights();
  explicit CostWeights(const std::array<double, kOpKindCount>& weights);

  static CostWeights all_ones() { return CostWeights{}; }
  static CostWeights comparisons_only();

  double operator[](OpKind kind) const {
    return weights_[static_cast<std::size_t>(kind)];
  }
  const std::array<double, kOpKindCount>& values() const { return weights_; }

  bool operator==(const CostWeights&) const = default;

 private:
  std::array<double, kOpKindCount> weights_;
};

/// Exact per-kind operation tallies for a single run.
class CostCounter {
 public:
  CostCounter() = default;

  /// Adds `amount` (>= 1) to the tally of `kind`. Throws CounterOverflow if
  /// the tally would wrap, std::invalid_argument if amount is zero.
  void charge(OpKind kind, std::uint64_t amount = 1) {
    if (amount == 0) throw_zero_amount();
    auto& slot = counts_[static_cast<std::size_t>(kind)];
    if (__builtin_add_overflow(slot, amount, &slot)) throw CounterOverflow(kind);
  }

  std::uint64_t operator[](OpKind kind) const {
    return counts_[static_cast<std::size_t>(kind)];
  }
  const std::array<std::uint64_t, kOpKindCount>& counts() const {
    return counts_;
  }

  bool empty() const;

  bool operator==(const CostCounter&) const = default;

 private:
  [[noreturn]] static void throw_zero_amount();

  std::array<std::uint64_t, kOpKindCount> counts_{};
};

/// Σ weight(kind) × tally(kind).
double total(const CostCounter& counter, const CostWeights& weights);

/// Per-kind sums; throws CounterOverflow on wrap.
CostCounter merge(const CostCounter& a, const CostCounter& b);

}  // namespace complab
