#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "best_corner.hpp"
#include "jitterdisc/discrepancy.hpp"
#include "jitterdisc/errors.hpp"
#include "jitterdisc/rng.hpp"

namespace jitterdisc {

namespace {

class CoordinateAscent {
 public:
  explicit CoordinateAscent(const PointSet& points)
      : p_(points), d_(points.dim()), npts_(points.size()), n_(static_cast<double>(points.size())) {
    const auto ud = static_cast<std::size_t>(d_);
    values_.resize(ud);
    rank_.resize(npts_ * ud);
    for (int a = 0; a < d_; ++a) {
      auto& vals = values_[static_cast<std::size_t>(a)];
      vals.reserve(npts_ + 1);
      for (std::size_t i = 0; i < npts_; ++i) vals.push_back(p_.coord(i, a));
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      vals.push_back(1.0);
      for (std::size_t i = 0; i < npts_; ++i) {
        rank_[i * ud + static_cast<std::size_t>(a)] = static_cast<std::uint32_t>(
            std::lower_bound(vals.begin(), vals.end(), p_.coord(i, a)) - vals.begin());
      }
    }
    hist_.reserve(npts_ + 2);
    corner_.resize(ud);
  }

  std::size_t candidates(int axis) const { return values_[static_cast<std::size_t>(axis)].size(); }

  /// Ascends from `start` until a full pass over the axes changes nothing.
  /// Each step moves one coordinate to its best value (largest on ties), so
  /// (value, corner) increases lexicographically and the loop terminates.
  void ascend(std::vector<std::size_t> idx, Side side, detail::BestCorner& best) {
    double current = evaluate(idx, side);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int k = 0; k < d_; ++k) {
        const auto [j, val] = best_along(idx, k, side);
        const auto uk = static_cast<std::size_t>(k);
        if (val > current || (val == current && j > idx[uk])) {
          idx[uk] = j;
          current = val;
          changed = true;
        }
      }
    }
    for (int a = 0; a < d_; ++a) {
      corner_[static_cast<std::size_t>(a)] = values_[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]];
    }
    best.offer(current, corner_, side);
  }

 private:
  double volume_at(const std::vector<std::size_t>& idx, int axis, std::size_t j) const {
    double v = 1.0;
    for (int a = 0; a < d_; ++a) {
      const auto ua = static_cast<std::size_t>(a);
      v *= values_[ua][a == axis ? j : idx[ua]];
    }
    return v;
  }

  double evaluate(const std::vector<std::size_t>& idx, Side side) const {
    const auto ud = static_cast<std::size_t>(d_);
    std::size_t count = 0;
    for (std::size_t i = 0; i < npts_; ++i) {
      bool inside = true;
      for (std::size_t a = 0; a < ud && inside; ++a) {
        const std::size_t r = rank_[i * ud + a];
        inside = side == Side::Overfull ? r <= idx[a] : r < idx[a];
      }
      if (inside) ++count;
    }
    const double nv = n_ * volume_at(idx, -1, 0);
    return side == Side::Overfull ? static_cast<double>(count) - nv : nv - static_cast<double>(count);
  }

  std::pair<std::size_t, double> best_along(const std::vector<std::size_t>& idx, int axis, Side side) {
    const auto ud = static_cast<std::size_t>(d_);
    const auto uk = static_cast<std::size_t>(axis);
    const std::size_t nc = candidates(axis);
    hist_.assign(nc, 0);
    for (std::size_t i = 0; i < npts_; ++i) {
      bool inside = true;
      for (std::size_t a = 0; a < ud && inside; ++a) {
        if (a == uk) continue;
        const std::size_t r = rank_[i * ud + a];
        inside = side == Side::Overfull ? r <= idx[a] : r < idx[a];
      }
      if (inside) ++hist_[rank_[i * ud + uk]];
    }
    std::size_t best_j = 0;
    double best_val = 0.0;
    std::size_t cum = 0;
    for (std::size_t j = 0; j < nc; ++j) {
      double val = 0.0;
      const double nv = n_ * volume_at(idx, axis, j);
      if (side == Side::Overfull) {
        cum += hist_[j];
        val = static_cast<double>(cum) - nv;
      } else {
        val = nv - static_cast<double>(cum);
        cum += hist_[j];
      }
      if (j == 0 || val >= best_val) {
        best_val = val;
        best_j = j;
      }
    }
    return {best_j, best_val};
  }

  const PointSet& p_;
  int d_;
  std::size_t npts_;
  double n_;
  std::vector<std::vector<double>> values_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::size_t> hist_;
  std::vector<double> corner_;
};

}  // namespace

DiscrepancyEstimate star_disc_heuristic(const PointSet& points, const HeuristicOptions& options) {
  if (options.restarts < 1) throw ValidationError("heuristic needs restarts >= 1");
  CoordinateAscent search(points);
  detail::BestCorner best;
  const auto ud = static_cast<std::size_t>(points.dim());
  std::vector<std::size_t> start(ud);
  for (int r = 0; r < options.restarts; ++r) {
    SplitMix64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
    for (std::size_t a = 0; a < ud; ++a) start[a] = rng.below(search.candidates(static_cast<int>(a)));
    search.ascend(start, Side::Overfull, best);
    search.ascend(start, Side::Underfull, best);
  }
  return best.to_estimate(EstimateKind::LowerWitness);
}

}  // namespace jitterdisc
