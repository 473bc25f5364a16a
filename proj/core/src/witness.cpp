#include "jitterdisc/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "jitterdisc/errors.hpp"
#include "jitterdisc/rng.hpp"
#include "jitterdisc/sampler.hpp"
#include "jitterdisc/stats.hpp"

namespace jitterdisc {

std::string to_string(WitnessScheme scheme) {
  switch (scheme) {
    case WitnessScheme::Construct: return "construct";
    case WitnessScheme::DiscreteLowerMain: return "discrete";
    case WitnessScheme::SmallM: return "smallm";
  }
  return "construct";
}

WitnessScheme witness_scheme_from_string(const std::string& name) {
  if (name == "construct") return WitnessScheme::Construct;
  if (name == "discrete") return WitnessScheme::DiscreteLowerMain;
  if (name == "smallm") return WitnessScheme::SmallM;
  throw ValidationError("unknown witness scheme '" + name + "'");
}

namespace {

/// Per-axis slab data shared by the three schemes: the axis-i coordinates of
/// the points lying in [0,r)^{i-1} x [r_i, 1) x [0,r)^{d-i}, sorted.
std::vector<double> slab_coords(const PointSet& points, int axis, std::span<const double> r) {
  std::vector<double> out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    bool inside = points.coord(p, axis) >= r[static_cast<std::size_t>(axis)];
    for (int a = 0; a < points.dim() && inside; ++a) {
      if (a != axis) inside = points.coord(p, a) < r[static_cast<std::size_t>(a)];
    }
    if (inside) out.push_back(points.coord(p, axis));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AxisRect slice_rect(std::span<const double> r, int axis, double upper) {
  std::vector<double> lo(r.size(), 0.0);
  std::vector<double> hi(r.begin(), r.end());
  lo[static_cast<std::size_t>(axis)] = r[static_cast<std::size_t>(axis)];
  hi[static_cast<std::size_t>(axis)] = upper;
  return AxisRect(std::move(lo), std::move(hi));
}

void finish(const PointSet& points, WitnessResult& res) {
  CompensatedSum sum;
  for (double v : res.per_dim_disc) sum.add(v);
  res.total = sum.value();
  res.box_disc = signed_disc(points, res.box_rect(), res.closure);
}

WitnessResult start_result(WitnessScheme scheme, int m, std::vector<double> r) {
  WitnessResult res;
  res.scheme = scheme;
  res.m = m;
  const std::size_t d = r.size();
  res.r = std::move(r);
  res.box.reserve(d);
  res.closure.reserve(d);
  res.per_dim_disc.reserve(d);
  res.slices.reserve(d);
  return res;
}

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

}  // namespace

WitnessResult witness_construct(const PointSet& points, std::span<const double> r) {
  const int d = points.dim();
  if (r.size() != static_cast<std::size_t>(d)) throw ValidationError("r must have one entry per axis");
  const int m = stratified_resolution(points);
  std::vector<std::int64_t> steps(static_cast<std::size_t>(d));
  std::vector<double> rg(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    const double ra = r[static_cast<std::size_t>(a)];
    const double scaled = ra * m;
    const auto k = static_cast<std::int64_t>(std::llround(scaled));
    if (!(ra >= 0.0 && ra < 1.0) || std::fabs(scaled - static_cast<double>(k)) > 1e-9 || k >= m) {
      throw ValidationError("r_" + std::to_string(a + 1) + " = " + std::to_string(ra) +
                            " is not an integer multiple of 1/" + std::to_string(m) + " in [0,1)");
    }
    steps[static_cast<std::size_t>(a)] = k;
    rg[static_cast<std::size_t>(a)] = grid_value(k, m);
  }

  WitnessResult res = start_result(WitnessScheme::Construct, m, rg);
  for (int i = 0; i < d; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    double other = 1.0;
    for (int a = 0; a < d; ++a) {
      if (a != i) other *= static_cast<double>(steps[static_cast<std::size_t>(a)]);
    }
    const auto slab = slab_coords(points, i, rg);
    // N·λ(R_i) = (m·S - m·r_i) · prod_{j != i} m·r_j, exact at grid values.
    auto nvol = [&](double s) { return (static_cast<double>(m) * s - static_cast<double>(steps[ui])) * other; };

    double best_s = 1.0;
    double best = static_cast<double>(slab.size()) - nvol(1.0);
    for (std::size_t k = 0; k < slab.size();) {
      std::size_t e = k;
      while (e < slab.size() && slab[e] == slab[k]) ++e;
      const double v = static_cast<double>(e) - nvol(slab[k]);
      if (v > best || (v == best && slab[k] > best_s)) {
        best = v;
        best_s = slab[k];
      }
      k = e;
    }
    const Closure face = best_s < 1.0 ? Closure::Closed : Closure::Strict;
    res.box.push_back(best_s);
    res.closure.push_back(face);
    res.per_dim_disc.push_back(best);
    res.slices.push_back(slice_rect(rg, i, best_s));
  }
  finish(points, res);
  return res;
}

WitnessResult witness_discrete(const PointSet& points) {
  const int d = points.dim();
  const int m = stratified_resolution(points);
  if (m < d) throw ValidationError("discrete witness needs m >= d (m=" + std::to_string(m) + ", d=" + std::to_string(d) + ")");
  const int k = m / d;
  const int base = m - k;
  const double r = grid_value(base, m);
  const auto slab_cells = static_cast<double>(ipow(static_cast<std::uint64_t>(base), d - 1));

  WitnessResult res = start_result(WitnessScheme::DiscreteLowerMain, m, std::vector<double>(static_cast<std::size_t>(d), r));
  for (int i = 0; i < d; ++i) {
    const auto slab = slab_coords(points, i, res.r);
    double best = 0.0;
    double best_s = r;
    bool any = false;
    for (int j = 0; j < k; ++j) {
      const double z = grid_value(2 * (base + j) + 1, 2 * static_cast<std::int64_t>(m));
      const auto count = static_cast<double>(std::lower_bound(slab.begin(), slab.end(), z) - slab.begin());
      const double v = count - (2.0 * j + 1.0) * slab_cells / 2.0;
      if (!any || v >= best) {
        best = v;
        best_s = z;
        any = true;
      }
    }
    if (best < 0.0) {
      best = 0.0;
      best_s = r;
    }
    res.box.push_back(best_s);
    res.closure.push_back(Closure::Strict);
    res.per_dim_disc.push_back(best);
    res.slices.push_back(slice_rect(res.r, i, best_s));
  }
  finish(points, res);
  return res;
}

WitnessResult witness_smallm(const PointSet& points) {
  const int d = points.dim();
  const int m = stratified_resolution(points);
  const int base = m - 1;
  const double r = grid_value(base, m);
  const std::uint64_t n_prime = ipow(static_cast<std::uint64_t>(base), d - 1);
  const bool thin = n_prime < 16;
  const double upper = thin ? grid_value(static_cast<std::int64_t>(2 * n_prime * static_cast<std::uint64_t>(base) + 1),
                                         static_cast<std::int64_t>(2 * n_prime * static_cast<std::uint64_t>(m)))
                            : grid_value(2 * base + 1, 2 * static_cast<std::int64_t>(m));
  // N·λ: N'/2 for the half-cell slab, exactly 1/2 for the thin slab.
  const double nvol = thin ? 0.5 : static_cast<double>(n_prime) / 2.0;
  const Closure face = thin ? Closure::Closed : Closure::Strict;

  WitnessResult res = start_result(WitnessScheme::SmallM, m, std::vector<double>(static_cast<std::size_t>(d), r));
  for (int i = 0; i < d; ++i) {
    const auto slab = slab_coords(points, i, res.r);
    const auto end = thin ? std::upper_bound(slab.begin(), slab.end(), upper) : std::lower_bound(slab.begin(), slab.end(), upper);
    const double v = static_cast<double>(end - slab.begin()) - nvol;
    const bool take = v >= 0.0;
    res.box.push_back(take ? upper : r);
    res.closure.push_back(take ? face : Closure::Strict);
    res.per_dim_disc.push_back(take ? v : 0.0);
    res.slices.push_back(slice_rect(res.r, i, take ? upper : r));
  }
  finish(points, res);
  return res;
}

WitnessResult run_witness(const PointSet& points, WitnessScheme scheme, std::span<const double> r) {
  switch (scheme) {
    case WitnessScheme::Construct: return witness_construct(points, r);
    case WitnessScheme::DiscreteLowerMain: return witness_discrete(points);
    case WitnessScheme::SmallM: return witness_smallm(points);
  }
  throw ValidationError("unknown witness scheme");
}

std::vector<std::size_t> half_slab_counts(const PointSet& points, int axis) {
  const int d = points.dim();
  if (axis < 0 || axis >= d) throw ValidationError("axis out of range");
  const int m = stratified_resolution(points);
  if (m < d) throw ValidationError("half-slab counts need m >= d");
  const int k = m / d;
  const int base = m - k;
  const std::vector<double> r(static_cast<std::size_t>(d), grid_value(base, m));
  const auto slab = slab_coords(points, axis, r);
  std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
  for (int j = 0; j < k; ++j) {
    const double y = grid_value(base + j, m);
    const double z = grid_value(2 * (base + j) + 1, 2 * static_cast<std::int64_t>(m));
    counts[static_cast<std::size_t>(j)] = static_cast<std::size_t>(
        std::lower_bound(slab.begin(), slab.end(), z) - std::lower_bound(slab.begin(), slab.end(), y));
  }
  return counts;
}

std::vector<AxisRect> random_anchored_boxes(int d, std::size_t count, std::uint64_t seed) {
  if (d < 1) throw ValidationError("dimension must be >= 1");
  std::vector<AxisRect> boxes;
  boxes.reserve(count);
  for (std::size_t q = 0; q < count; ++q) {
    SplitMix64 rng(derive_seed(seed, q));
    std::vector<double> corner(static_cast<std::size_t>(d));
    for (auto& c : corner) c = rng.uniform01();
    boxes.push_back(AxisRect::anchored(std::move(corner)));
  }
  return boxes;
}

ZeroMeanReport mean_disc_is_zero_test(const StratifiedSpec& spec, std::span<const AxisRect> rects,
                                      std::size_t replications, std::uint64_t seed, unsigned threads) {
  if (replications < 1000) throw ValidationError("zero-mean test needs at least 1000 replications");
  for (const auto& rect : rects) {
    if (rect.dim() != spec.dim()) throw ValidationError("rectangle dimension does not match the spec");
  }
  const std::size_t nr = rects.size();
  std::vector<double> values(nr * replications);
  parallel_for(replications, threads, [&](std::size_t rep) {
    const PointSet pts = generate_stratified(spec, derive_seed(seed, rep));
    for (std::size_t q = 0; q < nr; ++q) values[q * replications + rep] = signed_disc(pts, rects[q]);
  });

  ZeroMeanReport report;
  report.replications = replications;
  report.rows.reserve(nr);
  const double root = std::sqrt(static_cast<double>(replications));
  const double rounding = 1e-9 * static_cast<double>(spec.cell_count());
  for (std::size_t q = 0; q < nr; ++q) {
    const auto s = summarize(std::span<const double>(values.data() + q * replications, replications));
    const bool pass = std::fabs(s.mean) <= 4.0 * s.std / root || std::fabs(s.mean) <= rounding;
    ZeroMeanRow row{rects[q], s.mean, s.std, pass};
    if (row.pass) ++report.passed;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace jitterdisc
