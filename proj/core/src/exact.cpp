#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "best_corner.hpp"
#include "jitterdisc/discrepancy.hpp"
#include "jitterdisc/errors.hpp"

namespace jitterdisc {

double exact_work_estimate(int d, std::size_t n) {
  const double np1 = static_cast<double>(n) + 1.0;
  if (d <= 1) return np1;
  if (d == 2) return np1 * np1;
  // Number of 2-D sweeps in the pruned recursion is at most C(N + d - 2, d - 2).
  const double sweeps = std::exp(std::lgamma(static_cast<double>(n) + d - 1) - std::lgamma(static_cast<double>(n) + 1) -
                                 std::lgamma(static_cast<double>(d) - 1));
  return sweeps * np1 * np1;
}

bool exact_feasible(int d, std::size_t n, const ExactOptions& options) {
  return exact_work_estimate(d, n) <= options.work_budget;
}

namespace {

class ExactEngine {
 public:
  explicit ExactEngine(const PointSet& points)
      : p_(points), d_(points.dim()), n_(static_cast<double>(points.size())), corner_(static_cast<std::size_t>(d_), 1.0) {}

  DiscrepancyEstimate run() {
    std::vector<std::size_t> all(p_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (d_ == 1) {
      sweep_1d(all);
    } else {
      overfull(all, 0, 1.0);
      std::fill(corner_.begin(), corner_.end(), 1.0);
      underfull(all, 0, 1.0);
    }
    return best_.to_estimate(EstimateKind::Exact);
  }

 private:
  void sort_by(std::vector<std::size_t>& idx, int axis) const {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p_.coord(a, axis) < p_.coord(b, axis); });
  }

  void sweep_1d(std::vector<std::size_t>& idx) {
    sort_by(idx, 0);
    std::size_t i = 0;
    while (i < idx.size()) {
      const double v = p_.coord(idx[i], 0);
      std::size_t e = i;
      while (e < idx.size() && p_.coord(idx[e], 0) == v) ++e;
      corner_[0] = v;
      best_.offer(n_ * v - static_cast<double>(i), corner_, Side::Underfull);
      best_.offer(static_cast<double>(e) - n_ * v, corner_, Side::Overfull);
      i = e;
    }
    corner_[0] = 1.0;
    best_.offer(n_ * 1.0 - static_cast<double>(idx.size()), corner_, Side::Underfull);
  }

  // disc+ over corners whose leading coordinates are chosen on axes < axis.
  // Only coordinates of still-active points are candidates: moving a corner
  // coordinate down to the nearest active coordinate keeps the count and
  // shrinks the volume. The value 1.0 is dominated for the same reason.
  void overfull(std::vector<std::size_t> active, int axis, double vol) {
    if (active.empty()) return;
    if (axis == d_ - 2) {
      sweep_2d_overfull(active, vol);
      return;
    }
    sort_by(active, axis);
    std::size_t i = 0;
    while (i < active.size()) {
      const double v = p_.coord(active[i], axis);
      std::size_t e = i;
      while (e < active.size() && p_.coord(active[e], axis) == v) ++e;
      corner_[static_cast<std::size_t>(axis)] = v;
      overfull(std::vector<std::size_t>(active.begin(), active.begin() + static_cast<std::ptrdiff_t>(e)), axis + 1,
               vol * v);
      i = e;
    }
  }

  // disc- with strict counts; candidates are active coordinates plus 1.0.
  void underfull(std::vector<std::size_t> active, int axis, double vol) {
    if (axis == d_ - 2) {
      sweep_2d_underfull(active, vol);
      return;
    }
    sort_by(active, axis);
    std::size_t i = 0;
    while (i < active.size()) {
      const double v = p_.coord(active[i], axis);
      std::size_t e = i;
      while (e < active.size() && p_.coord(active[e], axis) == v) ++e;
      corner_[static_cast<std::size_t>(axis)] = v;
      underfull(std::vector<std::size_t>(active.begin(), active.begin() + static_cast<std::ptrdiff_t>(i)), axis + 1,
                vol * v);
      i = e;
    }
    corner_[static_cast<std::size_t>(axis)] = 1.0;
    underfull(std::move(active), axis + 1, vol * 1.0);
  }

  struct Sweep {
    std::vector<double> ys;
    std::vector<std::size_t> rank;  // per active entry, rank of its b-coordinate in ys
  };

  Sweep prepare(std::vector<std::size_t>& active, bool append_one) const {
    const int a = d_ - 2;
    const int b = d_ - 1;
    Sweep s;
    s.ys.reserve(active.size() + 1);
    for (std::size_t idx : active) s.ys.push_back(p_.coord(idx, b));
    std::sort(s.ys.begin(), s.ys.end());
    s.ys.erase(std::unique(s.ys.begin(), s.ys.end()), s.ys.end());
    if (append_one) s.ys.push_back(1.0);
    sort_by(active, a);
    s.rank.resize(active.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
      s.rank[k] = static_cast<std::size_t>(std::lower_bound(s.ys.begin(), s.ys.end(), p_.coord(active[k], b)) - s.ys.begin());
    }
    return s;
  }

  void sweep_2d_overfull(std::vector<std::size_t>& active, double vol) {
    const int a = d_ - 2;
    const auto ua = static_cast<std::size_t>(a);
    const Sweep s = prepare(active, false);
    std::vector<std::size_t> cnt(s.ys.size(), 0);
    std::size_t i = 0;
    while (i < active.size()) {
      const double x = p_.coord(active[i], a);
      while (i < active.size() && p_.coord(active[i], a) == x) ++cnt[s.rank[i++]];
      const double vx = vol * x;
      std::size_t c = 0;
      for (std::size_t j = 0; j < s.ys.size(); ++j) {
        c += cnt[j];
        const double val = static_cast<double>(c) - n_ * (vx * s.ys[j]);
        if (val >= best_.value) {
          corner_[ua] = x;
          corner_[ua + 1] = s.ys[j];
          best_.offer(val, corner_, Side::Overfull);
        }
      }
    }
  }

  void sweep_2d_underfull(std::vector<std::size_t>& active, double vol) {
    const int a = d_ - 2;
    const auto ua = static_cast<std::size_t>(a);
    const Sweep s = prepare(active, true);
    std::vector<std::size_t> cnt(s.ys.size(), 0);
    std::size_t i = 0;
    auto evaluate = [&](double x) {
      const double vx = vol * x;
      std::size_t c = 0;
      for (std::size_t j = 0; j < s.ys.size(); ++j) {
        const double val = n_ * (vx * s.ys[j]) - static_cast<double>(c);
        if (val >= best_.value) {
          corner_[ua] = x;
          corner_[ua + 1] = s.ys[j];
          best_.offer(val, corner_, Side::Underfull);
        }
        c += cnt[j];
      }
    };
    while (i < active.size()) {
      const double x = p_.coord(active[i], a);
      evaluate(x);
      while (i < active.size() && p_.coord(active[i], a) == x) ++cnt[s.rank[i++]];
    }
    evaluate(1.0);
  }

  const PointSet& p_;
  int d_;
  double n_;
  std::vector<double> corner_;
  detail::BestCorner best_;
};

}  // namespace

DiscrepancyEstimate star_disc_exact(const PointSet& points, const ExactOptions& options) {
  const double work = exact_work_estimate(points.dim(), points.size());
  if (work > options.work_budget) {
    throw InfeasibleError("exact infeasible for N=" + std::to_string(points.size()) + ", d=" +
                          std::to_string(points.dim()) + " (work estimate " + std::to_string(work) +
                          " exceeds budget " + std::to_string(options.work_budget) +
                          "); use the heuristic or certified method");
  }
  return ExactEngine(points).run();
}

}  // namespace jitterdisc
