#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "jitterdisc/bounds.hpp"
#include "jitterdisc/errors.hpp"
#include "jitterdisc/harness.hpp"
#include "jitterdisc/stats.hpp"

namespace jitterdisc {

CollapseReport collapse_analysis(const std::vector<SweepRecord>& records, double threshold) {
  if (!(threshold >= 1.0)) throw ValidationError("collapse threshold must be >= 1");
  if (records.empty()) throw ValidationError("collapse analysis needs at least one record");

  std::map<std::pair<SamplerKind, int>, CollapseGroup> groups;
  for (const auto& r : records) {
    auto& g = groups[{r.sampler, r.d}];
    g.sampler = r.sampler;
    g.d = r.d;
    double rate = 0.0;
    if (r.sampler == SamplerKind::Jittered) {
      if (!r.m) throw ValidationError("jittered record without m");
      g.params.push_back(*r.m);
      rate = jittered_rate(*r.m, r.d);
    } else {
      g.params.push_back(static_cast<double>(r.n));
      rate = std::sqrt(static_cast<double>(r.d) * static_cast<double>(r.n));
    }
    g.ratios.push_back(r.mean_disc / rate);
  }

  CollapseReport report;
  report.threshold = threshold;
  report.pass = true;
  for (auto& [key, g] : groups) {
    const auto [lo, hi] = std::minmax_element(g.ratios.begin(), g.ratios.end());
    g.min_ratio = *lo;
    g.max_ratio = *hi;
    g.spread = g.ratios.size() == 1 ? 1.0 : g.max_ratio / g.min_ratio;
    g.pass = g.min_ratio > 0.0 && g.spread <= threshold;
    report.pass = report.pass && g.pass;
    report.groups.push_back(std::move(g));
  }
  return report;
}

double product_integrand_variation(int d) {
  if (d < 1) throw ValidationError("dimension must be >= 1");
  return std::ldexp(1.0, d) - 1.0;
}

KhReport kh_demo(const PointSet& points, const KhOptions& options) {
  KhReport rep;
  rep.d = points.dim();
  rep.n = points.size();
  rep.integral = std::ldexp(1.0, -rep.d);

  CompensatedSum sum;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double f = 1.0;
    for (double x : points.point(i)) f *= x;
    sum.add(f);
  }
  rep.estimate = sum.value() / static_cast<double>(rep.n);
  rep.error = std::abs(rep.integral - rep.estimate);

  DiscrepancyEstimate est;
  if (exact_feasible(rep.d, rep.n, options.exact)) {
    est = star_disc_exact(points, options.exact);
  } else {
    est = star_disc_certified_upper(points, CoverSpec::from_grid(options.fallback_cover_grid, rep.d));
  }
  rep.dstar = est.value;
  rep.dstar_kind = est.kind;
  rep.dstar_normalized = normalized(est, rep.n);
  rep.variation = product_integrand_variation(rep.d);
  rep.bound = rep.dstar_normalized * rep.variation;
  rep.holds = rep.error <= rep.bound;
  return rep;
}

}  // namespace jitterdisc
