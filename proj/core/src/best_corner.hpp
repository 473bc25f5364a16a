#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "jitterdisc/discrepancy.hpp"

namespace jitterdisc::detail {

/// Running maximum of a discrepancy objective. Equal values keep the
/// lexicographically largest corner, which makes every engine's witness
/// independent of evaluation order.
struct BestCorner {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> corner;
  Side side = Side::Overfull;

  bool offer(double v, std::span<const double> c, Side s) {
    if (v > value || (v == value && std::lexicographical_compare(corner.begin(), corner.end(), c.begin(), c.end()))) {
      value = v;
      corner.assign(c.begin(), c.end());
      side = s;
      return true;
    }
    return false;
  }

  void merge(const BestCorner& other) {
    if (!other.corner.empty()) offer(other.value, other.corner, other.side);
  }

  DiscrepancyEstimate to_estimate(EstimateKind kind) const {
    DiscrepancyEstimate est;
    est.value = value;
    est.kind = kind;
    est.witness = BoxWitness{corner, side};
    return est;
  }
};

}  // namespace jitterdisc::detail
