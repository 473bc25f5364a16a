#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "best_corner.hpp"
#include "jitterdisc/discrepancy.hpp"
#include "jitterdisc/errors.hpp"
#include "jitterdisc/point_set.hpp"

namespace jitterdisc {

DiscrepancyEstimate star_disc_certified_upper(const PointSet& points, const CoverSpec& cover,
                                              const CertifiedOptions& options) {
  const int d = points.dim();
  if (cover.dim() != d) throw ValidationError("cover dimension does not match the point set");
  const int grid = cover.grid();
  const auto side = static_cast<std::size_t>(grid) + 1;
  const double corners = std::pow(static_cast<double>(side), d);
  if (corners > options.corner_budget) {
    throw InfeasibleError("certified cover with M=" + std::to_string(grid) + " has " + std::to_string(corners) +
                          " corners in dimension " + std::to_string(d) + ", over the budget of " +
                          std::to_string(options.corner_budget) + "; use a smaller M");
  }
  const auto total = static_cast<std::size_t>(corners);

  std::vector<double> g(side);
  for (std::size_t j = 0; j < side; ++j) g[j] = grid_value(static_cast<std::int64_t>(j), grid);

  // closed[c]: points whose closed-index vector is <= c, i.e. p <= corner;
  // strict[c]: points with p < corner. Built as histograms, then prefix-summed.
  std::vector<std::uint32_t> closed(total, 0);
  std::vector<std::uint32_t> strict(total, 0);
  std::vector<std::size_t> stride(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) stride[static_cast<std::size_t>(a)] = a == 0 ? 1 : stride[static_cast<std::size_t>(a - 1)] * side;

  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t ci = 0;
    std::size_t si = 0;
    for (int a = 0; a < d; ++a) {
      const double c = points.coord(i, a);
      const auto cl = static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), c) - g.begin());
      const auto st = static_cast<std::size_t>(std::upper_bound(g.begin(), g.end(), c) - g.begin());
      ci += cl * stride[static_cast<std::size_t>(a)];
      si += st * stride[static_cast<std::size_t>(a)];
    }
    ++closed[ci];
    ++strict[si];
  }
  for (int a = 0; a < d; ++a) {
    const std::size_t s = stride[static_cast<std::size_t>(a)];
    for (std::size_t idx = 0; idx < total; ++idx) {
      if ((idx / s) % side != 0) {
        closed[idx] += closed[idx - s];
        strict[idx] += strict[idx - s];
      }
    }
  }

  const double n = static_cast<double>(points.size());
  detail::BestCorner best;
  std::vector<double> corner(static_cast<std::size_t>(d));
  for (std::size_t idx = 0; idx < total; ++idx) {
    double vol = 1.0;
    std::size_t rest = idx;
    for (int a = 0; a < d; ++a) {
      const double y = g[rest % side];
      rest /= side;
      corner[static_cast<std::size_t>(a)] = y;
      vol *= y;
    }
    const double nv = n * vol;
    best.offer(static_cast<double>(closed[idx]) - nv, corner, Side::Overfull);
    best.offer(nv - static_cast<double>(strict[idx]), corner, Side::Underfull);
  }

  DiscrepancyEstimate est = best.to_estimate(EstimateKind::CertifiedUpper);
  est.value += n * cover.delta();
  est.delta = cover.delta();
  return est;
}

}  // namespace jitterdisc
