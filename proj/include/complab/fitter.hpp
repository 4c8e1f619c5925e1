#pragma once

// Growth-class inference for cost series. A series belongs to a class g when
// cost(n) / g(n) stays inside a narrow band on the largest sampled
// dimensions; the band's edges are the constants of the two-sided bound.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace complab {

enum class GrowthClass : std::uint8_t {
  constant = 0,
  log_n,
  n,
  n_log_n,
  n_sq,
  n_cube,
};

inline constexpr std::size_t kGrowthClassCount = 6;

/// The rungs in strict asymptotic order, smallest first.
const std::vector<GrowthClass>& ladder();

/// Report identifier: "const", "log_n", "n", "n_log_n", "n_sq", "n_cube".
std::string_view to_string(GrowthClass growth);
/// Throws std::invalid_argument for unknown identifiers.
GrowthClass parse_growth_class(std::string_view name);

/// g(n) for the rung; logarithms are base 2. Positive for every n >= 2.
double evaluate(GrowthClass growth, double n);

inline bool operator<(GrowthClass a, GrowthClass b) {
  return static_cast<int>(a) < static_cast<int>(b);
}

struct SeriesPoint {
  std::uint64_t n = 0;
  double cost = 0.0;

  bool operator==(const SeriesPoint&) const = default;
};

/// A validated cost series: at least kMinSeriesPoints points, n >= 2 and
/// strictly increasing, every cost finite and strictly positive.
class CostSeries {
 public:
  static constexpr std::size_t kMinSeriesPoints = 8;

  /// Throws std::invalid_argument when the points violate the invariants.
  explicit CostSeries(std::vector<SeriesPoint> points);

  const std::vector<SeriesPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Index of the first tail point: the upper half, rounded up in size.
  std::size_t tail_begin() const { return points_.size() / 2; }

  /// Every cost multiplied by `factor` (> 0).
  CostSeries scaled(double factor) const;

 private:
  std::vector<SeriesPoint> points_;
};

struct FitResult {
  GrowthClass growth = GrowthClass::constant;
  /// Geometric mean of the tail ratios cost / g(n).
  double constant = 0.0;
  /// lower * g(n) <= cost <= upper * g(n) on every sampled n >= n0.
  double lower = 0.0;
  double upper = 0.0;
  std::uint64_t n0 = 0;
  /// max ratio / min ratio - 1 on the tail.
  double max_tail_deviation = 0.0;
  /// False when no rung passed; the fields then describe the closest rung.
  bool resolved = true;
};

/// Tail-ratio test of the series against one rung. Empty when the spread
/// exceeds 1 + tolerance. Throws std::invalid_argument unless the tolerance
/// lies in (0, 1).
std::optional<FitResult> member_of(const CostSeries& series, GrowthClass growth,
                                   double tolerance);

/// The smallest accepting rung, or an unresolved result carrying the rung
/// with the lowest tail deviation.
FitResult fit_class(const CostSeries& series, double tolerance);

/// Whether every tail point satisfies lower * g(n) <= cost <= upper * g(n)
/// for the fit's rung and constants.
bool satisfies_bounds(const CostSeries& series, const FitResult& fit);

}  // namespace complab
