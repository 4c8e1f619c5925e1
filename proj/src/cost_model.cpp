#include "complab/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace complab {

std::string_view to_string(OpKind kind) {
  switch (kind) {
    case OpKind::comparison: return "comparison";
    case OpKind::assignment: return "assignment";
    case OpKind::arithmetic: return "arithmetic";
    case OpKind::array_access: return "array_access";
    case OpKind::call: return "call";
    case OpKind::other: return "other";
  }
  return "unknown";
}

CounterOverflow::CounterOverflow(OpKind kind)
    : std::overflow_error("operation tally overflow for kind '" +
                          std::string(to_string(kind)) +
                          "': experiment too large for a 64-bit counter"),
      kind_(kind) {}

CostWeights::CostWeights() { weights_.fill(1.0); }

CostWeights::CostWeights(const std::array<double, kOpKindCount>& weights)
    : weights_(weights) {
  bool any_positive = false;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("cost weights must be finite and non-negative");
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive)
    throw std::invalid_argument("at least one cost weight must be positive");
}

CostWeights CostWeights::comparisons_only() {
  return CostWeights({1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
}

bool CostCounter::empty() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](std::uint64_t c) { return c == 0; });
}

void CostCounter::throw_zero_amount() {
  throw std::invalid_argument("charge amount must be at least 1");
}

double total(const CostCounter& counter, const CostWeights& weights) {
  double sum = 0.0;
  for (OpKind kind : kAllOpKinds) {
    sum += weights[kind] * static_cast<double>(counter[kind]);
  }
  return sum;
}

CostCounter merge(const CostCounter& a, const CostCounter& b) {
  CostCounter out = a;
  for (OpKind kind : kAllOpKinds) {
    if (b[kind] > 0) out.charge(kind, b[kind]);
  }
  return out;
}

}  // namespace complab
