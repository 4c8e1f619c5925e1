#include "complab/fitter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace complab {

namespace {

constexpr std::array<std::string_view, kGrowthClassCount> kGrowthNames = {
    "const", "log_n", "n", "n_log_n", "n_sq", "n_cube"};

struct TailRatios {
  double lowest = std::numeric_limits<double>::infinity();
  double highest = 0.0;
  double log_sum = 0.0;
  std::size_t count = 0;
};

TailRatios tail_ratios(const CostSeries& series, GrowthClass growth) {
  TailRatios r;
  const auto& pts = series.points();
  for (std::size_t i = series.tail_begin(); i < pts.size(); ++i) {
    const double ratio = pts[i].cost / evaluate(growth, static_cast<double>(pts[i].n));
    r.lowest = std::min(r.lowest, ratio);
    r.highest = std::max(r.highest, ratio);
    r.log_sum += std::log(ratio);
    ++r.count;
  }
  return r;
}

FitResult make_fit(const CostSeries& series, GrowthClass growth,
                   const TailRatios& r) {
  FitResult fit;
  fit.growth = growth;
  fit.constant = std::exp(r.log_sum / static_cast<double>(r.count));
  // A few ulps outward so that lower * g(n) <= cost <= upper * g(n) survives
  // the rounding of the ratio and of the product.
  constexpr double kSlack = 4 * std::numeric_limits<double>::epsilon();
  fit.lower = r.lowest * (1.0 - kSlack);
  fit.upper = r.highest * (1.0 + kSlack);
  fit.constant = std::clamp(fit.constant, fit.lower, fit.upper);
  fit.n0 = series.points()[series.tail_begin()].n;
  fit.max_tail_deviation = r.highest / r.lowest - 1.0;
  return fit;
}

void require_tolerance(double tolerance) {
  if (!(tolerance > 0.0 && tolerance < 1.0))
    throw std::invalid_argument("tolerance must lie in (0, 1)");
}

}  // namespace

const std::vector<GrowthClass>& ladder() {
  static const std::vector<GrowthClass> rungs = {
      GrowthClass::constant, GrowthClass::log_n, GrowthClass::n,
      GrowthClass::n_log_n,  GrowthClass::n_sq,  GrowthClass::n_cube};
  return rungs;
}

std::string_view to_string(GrowthClass growth) {
  return kGrowthNames.at(static_cast<std::size_t>(growth));
}

GrowthClass parse_growth_class(std::string_view name) {
  for (std::size_t i = 0; i < kGrowthClassCount; ++i)
    if (kGrowthNames[i] == name) return static_cast<GrowthClass>(i);
  throw std::invalid_argument("unknown growth class '" + std::string(name) + "'");
}

double evaluate(GrowthClass growth, double n) {
  switch (growth) {
    case GrowthClass::constant: return 1.0;
    case GrowthClass::log_n: return std::log2(n);
    case GrowthClass::n: return n;
    case GrowthClass::n_log_n: return n * std::log2(n);
    case GrowthClass::n_sq: return n * n;
    case GrowthClass::n_cube: return n * n * n;
  }
  throw std::logic_error("unhandled growth class");
}

CostSeries::CostSeries(std::vector<SeriesPoint> points) : points_(std::move(points)) {
  if (points_.size() < kMinSeriesPoints)
    throw std::invalid_argument("a cost series needs at least " +
                                std::to_string(kMinSeriesPoints) + " points, got " +
                                std::to_string(points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.n < 2) throw std::invalid_argument("series dimensions must be at least 2");
    if (i > 0 && p.n <= points_[i - 1].n)
      throw std::invalid_argument("series dimensions must be strictly increasing");
    if (!std::isfinite(p.cost) || p.cost <= 0.0)
      throw std::invalid_argument("series costs must be finite and positive (n = " +
                                  std::to_string(p.n) + ")");
  }
}

CostSeries CostSeries::scaled(double factor) const {
  if (!std::isfinite(factor) || factor <= 0.0)
    throw std::invalid_argument("scale factor must be finite and positive");
  auto pts = points_;
  for (auto& p : pts) p.cost *= factor;
  return CostSeries(std::move(pts));
}

std::optional<FitResult> member_of(const CostSeries& series, GrowthClass growth,
                                   double tolerance) {
  require_tolerance(tolerance);
  const auto r = tail_ratios(series, growth);
  if (r.highest > r.lowest * (1.0 + tolerance)) return std::nullopt;
  return make_fit(series, growth, r);
}

FitResult fit_class(const CostSeries& series, double tolerance) {
  require_tolerance(tolerance);
  std::optional<FitResult> closest;
  for (GrowthClass growth : ladder()) {
    if (auto fit = member_of(series, growth, tolerance)) return *fit;
    auto candidate = make_fit(series, growth, tail_ratios(series, growth));
    if (!closest || candidate.max_tail_deviation < closest->max_tail_deviation)
      closest = candidate;
  }
  closest->resolved = false;
  return *closest;
}

bool satisfies_bounds(const CostSeries& series, const FitResult& fit) {
  for (const auto& p : series.points()) {
    if (p.n < fit.n0) continue;
    const double g = evaluate(fit.growth, static_cast<double>(p.n));
    if (fit.lower * g > p.cost || p.cost > fit.upper * g) return false;
  }
  return true;
}

}  // namespace complab
