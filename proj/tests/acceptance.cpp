// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "complab/catalog.hpp"
#include "complab/classifier.hpp"
#include "complab/cli.hpp"
#include "complab/experiment.hpp"
#include "complab/fitter.hpp"
#include "complab/report.hpp"
#include "complab/search.hpp"

using namespace complab;

namespace {

// Collects failure notes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::string name(AlgorithmId id) { return std::string(to_string(id)); }
std::string name(GrowthClass g) { return std::string(to_string(g)); }

double cost_of(AlgorithmId id, const Instance& instance) {
  return total(run(id, instance).counter, CostWeights::all_ones());
}

// Verdicts are expensive, so each algorithm is classified once on its
// default study and shared across criteria.
class VerdictCache {
 public:
  const Verdict& get(AlgorithmId id) {
    auto it = cache_.find(id);
    if (it == cache_.end()) {
      const auto start = std::chrono::steady_clock::now();
      it = cache_.emplace(id, classify(id, default_study(id))).first;
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      std::cerr << "  classified " << name(id) << " in " << took.count() << " s\n";
    }
    return it->second;
  }

 private:
  std::map<AlgorithmId, Verdict> cache_;
};

bool has_band(const Verdict& v, GrowthClass lower, GrowthClass upper) {
  return v.band && v.band->lower == lower && v.band->upper == upper;
}

void expect_homogeneous(Check& c, const Verdict& v, GrowthClass g) {
  c.expect(v.homogeneous == true, name(v.algorithm) + ": not judged homogeneous");
  c.expect(v.worst_fit.growth == g && v.best_fit.growth == g,
           name(v.algorithm) + ": extremal classes " + name(v.best_fit.growth) + "/" +
               name(v.worst_fit.growth) + ", expected " + name(g));
}

Check criterion_insert(VerdictCache& verdicts) {
  Check c;
  const Verdict& v = verdicts.get(AlgorithmId::insert);
  c.expect(v.config.n_min == 256 && v.config.n_max == (1u << 19), "grid is not 2^8..2^19");
  c.expect(v.homogeneous == false, "insert not judged non-homogeneous");
  c.expect(has_band(v, GrowthClass::constant, GrowthClass::n), "band is not const..n");
  c.expect(v.band && v.band->minimal, "band not minimal");
  return c;
}

Check criterion_min(VerdictCache& verdicts) {
  Check c;
  const Verdict& v = verdicts.get(AlgorithmId::min);
  expect_homogeneous(c, v, GrowthClass::n);
  for (const auto n : geometric_grid(v.config.n_min, v.config.n_max, v.config.points)) {
    const auto reference = run(AlgorithmId::min, random_instance(AlgorithmId::min, n, 0)).counter;
    for (std::uint64_t s = 1; s < 1000; ++s) {
      const auto counter =
          run(AlgorithmId::min, random_instance(AlgorithmId::min, n, derive_seed(7, n, s))).counter;
      if (counter != reference) {
        c.expect(false, "min cost varies at n = " + std::to_string(n));
        break;
      }
    }
  }
  return c;
}

Check criterion_exemplars(VerdictCache& verdicts) {
  Check c;
  const Verdict& qs = verdicts.get(AlgorithmId::quicksort_first_pivot);
  c.expect(qs.homogeneous == false, "quicksort not judged non-homogeneous");
  c.expect(qs.worst_fit.growth == GrowthClass::n_sq, "quicksort upper is " + name(qs.worst_fit.growth));
  c.expect(qs.average.fit.resolved && qs.average.fit.growth == GrowthClass::n_log_n,
           "quicksort random series fits " + name(qs.average.fit.growth));

  const Verdict& gcd = verdicts.get(AlgorithmId::euclid_gcd);
  c.expect(gcd.homogeneous == false, "euclid_gcd not judged non-homogeneous");
  c.expect(has_band(gcd, GrowthClass::constant, GrowthClass::log_n), "euclid_gcd band is not const..log_n");

  expect_homogeneous(c, verdicts.get(AlgorithmId::floyd_heapify), GrowthClass::n);
  expect_homogeneous(c, verdicts.get(AlgorithmId::merge_sort), GrowthClass::n_log_n);
  expect_homogeneous(c, verdicts.get(AlgorithmId::heapsort), GrowthClass::n_log_n);

  const Verdict& sel = verdicts.get(AlgorithmId::select_median_of_medians);
  expect_homogeneous(c, sel, GrowthClass::n);
  for (const char* series : {"average", "searched_min", "searched_max"}) {
    const FittedSeries* s = sel.find_series(series);
    if (std::string(series) != "average" && sel.witness_certified && !s) continue;
    c.expect(s != nullptr, std::string("select has no ") + series + " series");
    if (!s) continue;
    c.expect(s->fit.resolved && s->fit.growth == GrowthClass::n,
             std::string("select ") + series + " series fits " + name(s->fit.growth));
  }
  return c;
}

const std::vector<AlgorithmId> kHomogeneousExemplars = {
    AlgorithmId::floyd_heapify, AlgorithmId::merge_sort, AlgorithmId::heapsort,
    AlgorithmId::select_median_of_medians};

Check criterion_average(VerdictCache& verdicts) {
  Check c;
  for (const auto id : kHomogeneousExemplars) {
    const Verdict& v = verdicts.get(id);
    c.expect(v.average.fit.resolved && v.average.fit.growth == v.worst_fit.growth,
             name(id) + ": average class " + name(v.average.fit.growth) + " vs worst " +
                 name(v.worst_fit.growth));
    c.expect(!v.average.exact.empty(), name(id) + ": no exact table");
    for (const auto& e : v.average.exact) {
      const double gap = std::abs(e.exact_mean - e.monte_carlo_mean);
      const double allowed = 5.0 * e.monte_carlo_std_error + 1e-9 * std::abs(e.exact_mean);
      c.expect(gap <= allowed, name(id) + ": exact mean " + std::to_string(e.exact_mean) +
                                   " vs Monte Carlo " + std::to_string(e.monte_carlo_mean) +
                                   " at n = " + std::to_string(e.n));
    }
  }
  return c;
}

Check criterion_witnesses() {
  Check c;
  std::size_t checked = 0;
  for (const auto id : all_algorithms()) {
    const bool best_ok = best_witness_certified(id);
    const bool worst_ok = worst_witness_certified(id);
    if (!best_ok && !worst_ok) continue;
    for (std::size_t n = 3; n <= 8; ++n) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (const auto& inst : enumerate_instances(id, n)) {
        const double cost = cost_of(id, inst);
        lo = std::min(lo, cost);
        hi = std::max(hi, cost);
      }
      if (best_ok)
        c.expect(cost_of(id, best_witness(id, n)) == lo,
                 name(id) + ": best witness misses the minimum at n = " + std::to_string(n));
      if (worst_ok)
        c.expect(cost_of(id, worst_witness(id, n)) == hi,
                 name(id) + ": worst witness misses the maximum at n = " + std::to_string(n));
      ++checked;
    }
  }
  c.expect(checked >= 6, "no certified witnesses were checked");
  return c;
}

Check criterion_fitter() {
  Check c;
  const auto grid = geometric_grid(256, 1u << 19, 12);
  for (const auto rung : ladder()) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      std::mt19937_64 rng(1000 * static_cast<std::uint64_t>(rung) + seed);
      std::uniform_real_distribution<double> noise(0.95, 1.05);
      const double scale = 0.5 + static_cast<double>(seed);
      std::vector<SeriesPoint> points;
      for (const auto n : grid)
        points.push_back({n, scale * evaluate(rung, static_cast<double>(n)) * noise(rng)});
      const auto fit = fit_class(CostSeries(std::move(points)), defaults::kTolerance);
      c.expect(fit.resolved && fit.growth == rung,
               "series from " + name(rung) + " seed " + std::to_string(seed) + " fitted as " +
                   name(fit.growth));
    }
  }
  return c;
}

Check criterion_bounds(VerdictCache& verdicts) {
  Check c;
  std::size_t fits = 0;
  const auto check_fit = [&](const std::string& label, const CostSeries& series,
                             const FitResult& fit) {
    ++fits;
    c.expect(satisfies_bounds(series, fit), label + " violates its bounds");
  };
  for (const auto id : all_algorithms()) {
    const Verdict& v = verdicts.get(id);
    for (const auto& s : v.series) check_fit(name(id) + " " + s.name, s.series, s.fit);
    check_fit(name(id) + " average result", v.average.series(), v.average.fit);
    if (v.band) {
      const FittedSeries* best = v.find_series("best");
      const FittedSeries* worst = v.find_series("worst");
      c.expect(best && worst, name(id) + ": missing extremal series");
      if (best && worst) {
        FitResult lower = v.best_fit;
        lower.lower = v.band->lower_constant;
        FitResult upper = v.worst_fit;
        upper.upper = v.band->upper_constant;
        check_fit(name(id) + " band lower edge", best->series, lower);
        check_fit(name(id) + " band upper edge", worst->series, upper);
      }
    }
  }
  c.expect(fits > 0, "no fits were checked");
  return c;
}

// Every instance of size n. Insert spaces are small at any n (n + 1 ranks),
// everything else goes through the bounded enumerator.
std::vector<Instance> whole_space(AlgorithmId id, std::size_t n) {
  if (family_of(id) != InstanceFamily::sorted_insert) return enumerate_instances(id, n);
  std::vector<Value> data(n);
  std::iota(data.begin(), data.end(), 1);
  std::vector<Instance> space;
  for (std::size_t rank = 0; rank <= n; ++rank)
    space.push_back(make_instance(id, n, data, insert_key_for_rank(n, rank)));
  return space;
}

double brute_force(AlgorithmId id, std::size_t n, SearchMode mode) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& inst : whole_space(id, n)) {
    const double cost = cost_of(id, inst);
    lo = std::min(lo, cost);
    hi = std::max(hi, cost);
  }
  return mode == SearchMode::minimize ? lo : hi;
}

Check criterion_search() {
  Check c;
  struct Case {
    AlgorithmId id;
    std::size_t n;
    std::uint64_t budget;
  };
  for (const Case& k : {Case{AlgorithmId::insert, 16, 500},
                        Case{AlgorithmId::quicksort_first_pivot, 8, 10000}}) {
    for (const auto mode : {SearchMode::minimize, SearchMode::maximize}) {
      const double target = brute_force(k.id, k.n, mode);
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        SearchConfig sc;
        sc.mode = mode;
        sc.budget = k.budget;
        sc.seed = seed;
        sc.neighborhood = default_neighborhood(k.id);
        const auto outcome = search_extremal(k.id, k.n, sc);
        c.expect(outcome.cost == target && outcome.evaluations_used <= k.budget,
                 name(k.id) + " " + std::string(to_string(mode)) + " seed " +
                     std::to_string(seed) + ": found " + std::to_string(outcome.cost) +
                     ", exhaustive " + std::to_string(target));
      }
    }
  }
  return c;
}

std::string cli_output(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"complab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + err.str();
}

Check criterion_reproducibility(VerdictCache& verdicts) {
  Check c;
  for (const auto id : {AlgorithmId::insert, AlgorithmId::euclid_gcd}) {
    const std::vector<std::string> args = {"classify", name(id)};
    const std::string first = cli_output(args);
    c.expect(first == cli_output(args), name(id) + ": repeated classify differs");
    c.expect(first == classify_report_json(verdicts.get(id)),
             name(id) + ": CLI report differs from the in-process report");
    const std::vector<std::string> csv = {"classify", name(id), "--out", "csv", "--seed", "99"};
    c.expect(cli_output(csv) == cli_output(csv), name(id) + ": repeated CSV differs");
  }
  for (const auto id : {AlgorithmId::heapsort, AlgorithmId::select_median_of_medians}) {
    const std::vector<std::string> args = {"classify", name(id), "--n-min", "64", "--n-max",
                                           "4096", "--trials", "16", "--seed", "5"};
    c.expect(cli_output(args) == cli_output(args), name(id) + ": repeated classify differs");
  }
  return c;
}

}  // namespace

int main() {
  VerdictCache verdicts;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"insert is non-homogeneous with minimal band const..n", [&] { return criterion_insert(verdicts); }},
      {"min is homogeneous n with instance-independent cost", [&] { return criterion_min(verdicts); }},
      {"exemplar verdicts and classes", [&] { return criterion_exemplars(verdicts); }},
      {"average class equals worst class; exact means agree", [&] { return criterion_average(verdicts); }},
      {"certified witnesses are exhaustive extremes for n = 3..8", criterion_witnesses},
      {"fitter recovers the generating rung of 60 noisy series", criterion_fitter},
      {"every fit satisfies its bounds", [&] { return criterion_bounds(verdicts); }},
      {"search matches exhaustive extremes", criterion_search},
      {"repeated classify reports are byte-identical", [&] { return criterion_reproducibility(verdicts); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (result.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << '\n';
    for (const auto& f : result.failures()) std::cout << "    " << f << '\n';
    std::cout.flush();
    failed += !result.passed();
  }
  return failed == 0 ? 0 : 1;
}
