#include <limits>
#include <random>

#include "complab/cost_model.hpp"
#include "doctest.h"

using namespace complab;

namespace {

CostCounter random_counter(std::mt19937_64& rng) {
  CostCounter c;
  for (OpKind kind : kAllOpKinds) {
    const auto amount = rng() % 1000;
    if (amount > 0) c.charge(kind, amount);
  }
  return c;
}

}  // namespace

TEST_CASE("charge increments exactly one tally") {
  CostCounter c;
  CHECK(c.empty());
  c.charge(OpKind::comparison, 1);
  CHECK(c[OpKind::comparison] == 1);
  for (OpKind kind : kAllOpKinds)
    if (kind != OpKind::comparison) CHECK(c[kind] == 0);

  c.charge(OpKind::comparison, 4);
  c.charge(OpKind::comparison, 3);
  CHECK(c[OpKind::comparison] == 8);
}

TEST_CASE("charge rejects zero amounts and overflow") {
  CostCounter c;
  CHECK_THROWS_AS(c.charge(OpKind::call, 0), std::invalid_argument);

  c.charge(OpKind::arithmetic, std::numeric_limits<std::uint64_t>::max() - 1);
  CHECK_THROWS_AS(c.charge(OpKind::arithmetic, 2), CounterOverflow);
  // The failed charge leaves the counter usable; the exact tally is gone.
  c.charge(OpKind::assignment, 1);
  CHECK(c[OpKind::assignment] == 1);
}

TEST_CASE("total applies weights") {
  CostCounter c;
  c.charge(OpKind::comparison, 4);
  c.charge(OpKind::assignment, 2);
  CHECK(total(c, CostWeights::all_ones()) == 6.0);
  CHECK(total(c, CostWeights::comparisons_only()) == 4.0);
  CHECK(total(CostCounter{}, CostWeights::all_ones()) == 0.0);
  CHECK(total(CostCounter{}, CostWeights({0, 0, 3, 0, 0, 0})) == 0.0);
}

TEST_CASE("weights must be non-negative with one positive entry") {
  CHECK_THROWS_AS(CostWeights({0, 0, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CostWeights({1, -1, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_NOTHROW(CostWeights({0, 0, 0, 0, 0, 0.5}));
}

TEST_CASE("merge examples") {
  CostCounter a, b;
  a.charge(OpKind::comparison, 1);
  b.charge(OpKind::assignment, 2);
  const auto m = merge(a, b);
  CHECK(m[OpKind::comparison] == 1);
  CHECK(m[OpKind::assignment] == 2);
  CHECK(merge(a, CostCounter{}) == a);

  CostCounter c3, c4;
  c3.charge(OpKind::call, 3);
  c4.charge(OpKind::call, 4);
  CHECK(merge(c3, c4)[OpKind::call] == 7);

  CostCounter full;
  full.charge(OpKind::other, std::numeric_limits<std::uint64_t>::max());
  CostCounter one;
  one.charge(OpKind::other);
  CHECK_THROWS_AS(merge(full, one), CounterOverflow);
}

TEST_CASE("merge is a commutative monoid on random counters") {
  std::mt19937_64 rng(20241015);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_counter(rng);
    const auto b = random_counter(rng);
    const auto c = random_counter(rng);
    CHECK(merge(a, b) == merge(b, a));
    CHECK(merge(merge(a, b), c) == merge(a, merge(b, c)));
    CHECK(merge(a, CostCounter{}) == a);
    CHECK(merge(CostCounter{}, a) == a);
  }
}

TEST_CASE("total is monotone along any charge sequence") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, kOpKindCount> w{};
    for (auto& x : w) x = static_cast<double>(rng() % 5);
    w[rng() % kOpKindCount] = 1.0;
    const CostWeights weights(w);
    CostCounter c;
    double last = 0.0;
    std::uint64_t charged = 0;
    for (int step = 0; step < 100; ++step) {
      const auto kind = kAllOpKinds[rng() % kOpKindCount];
      const auto amount = 1 + rng() % 10;
      c.charge(kind, amount);
      charged += amount;
      const double now = total(c, weights);
      CHECK(now >= last);
      last = now;
    }
    CHECK(total(c, CostWeights::all_ones()) == static_cast<double>(charged));
  }
}
