#include "jitterdisc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "jitterdisc/errors.hpp"

namespace jitterdisc {

AxisRect::AxisRect(std::vector<double> lo_, std::vector<double> hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw ValidationError("rectangle corners have different dimensions");
  if (lo.empty()) throw ValidationError("rectangle must have dimension >= 1");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] >= 0.0 && lo[i] <= hi[i] && hi[i] <= 1.0)) {
      throw ValidationError("rectangle needs 0 <= lo <= hi <= 1 on axis " + std::to_string(i));
    }
  }
}

AxisRect AxisRect::anchored(std::vector<double> corner) {
  std::vector<double> zero(corner.size(), 0.0);
  return AxisRect(std::move(zero), std::move(corner));
}

double AxisRect::volume() const noexcept {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

double signed_disc(const PointSet& points, const AxisRect& rect, std::span<const Closure> closure) {
  const int d = points.dim();
  if (rect.dim() != d) {
    throw ValidationError("rectangle dimension " + std::to_string(rect.dim()) + " does not match point dimension " +
                          std::to_string(d));
  }
  if (!closure.empty() && closure.size() != static_cast<std::size_t>(d)) {
    throw ValidationError("closure mask must have one entry per axis");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool inside = true;
    for (int a = 0; a < d && inside; ++a) {
      const double c = points.coord(i, a);
      const bool closed = !closure.empty() && closure[static_cast<std::size_t>(a)] == Closure::Closed;
      inside = c >= rect.lo[static_cast<std::size_t>(a)] &&
               (closed ? c <= rect.hi[static_cast<std::size_t>(a)] : c < rect.hi[static_cast<std::size_t>(a)]);
    }
    if (inside) ++count;
  }
  return static_cast<double>(count) - static_cast<double>(points.size()) * rect.volume();
}

std::string to_string(EstimateKind kind) {
  switch (kind) {
    case EstimateKind::Exact: return "exact";
    case EstimateKind::LowerWitness: return "lower-witness";
    case EstimateKind::CertifiedUpper: return "certified-upper";
  }
  return "exact";
}

std::string to_string(Side side) { return side == Side::Overfull ? "overfull" : "underfull"; }

namespace {

double corner_volume(std::span<const double> corner) {
  double v = 1.0;
  for (double y : corner) v *= y;
  return v;
}

std::size_t corner_count(const PointSet& points, std::span<const double> corner, bool closed) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool inside = true;
    for (int a = 0; a < points.dim() && inside; ++a) {
      const double c = points.coord(i, a);
      inside = closed ? c <= corner[static_cast<std::size_t>(a)] : c < corner[static_cast<std::size_t>(a)];
    }
    if (inside) ++count;
  }
  return count;
}

void check_corner(const PointSet& points, std::span<const double> corner) {
  if (corner.size() != static_cast<std::size_t>(points.dim())) throw ValidationError("corner dimension mismatch");
}

}  // namespace

double overfull_disc(const PointSet& points, std::span<const double> corner) {
  check_corner(points, corner);
  return static_cast<double>(corner_count(points, corner, true)) -
         static_cast<double>(points.size()) * corner_volume(corner);
}

double underfull_disc(const PointSet& points, std::span<const double> corner) {
  check_corner(points, corner);
  return static_cast<double>(points.size()) * corner_volume(corner) -
         static_cast<double>(corner_count(points, corner, false));
}

double normalized(const DiscrepancyEstimate& estimate, std::size_t n) {
  if (n == 0) throw ValidationError("normalization needs N >= 1");
  return estimate.value / static_cast<double>(n);
}

CoverSpec CoverSpec::from_grid(int grid, int d) {
  if (grid < 1) throw ValidationError("cover grid resolution must be >= 1");
  if (d < 1) throw ValidationError("dimension must be >= 1");
  const double inner = 1.0 - 1.0 / static_cast<double>(grid);
  return CoverSpec(grid, d, 1.0 - std::pow(inner, d));
}

CoverSpec CoverSpec::from_delta(double delta, int d) {
  if (!(delta > 0.0 && delta <= 1.0)) throw ValidationError("cover precision delta must lie in (0, 1]");
  if (d < 1) throw ValidationError("dimension must be >= 1");
  // 1 - (1-1/M)^d <= delta  <=>  M >= 1 / (1 - (1-delta)^(1/d)); start there and fix rounding.
  const double guess = 1.0 / -std::expm1(std::log1p(-delta) / d);
  auto m = static_cast<int>(std::max(1.0, std::floor(guess) - 1.0));
  while (from_grid(m, d).delta() > delta) ++m;
  while (m > 1 && from_grid(m - 1, d).delta() <= delta) --m;
  return from_grid(m, d);
}

}  // namespace jitterdisc
