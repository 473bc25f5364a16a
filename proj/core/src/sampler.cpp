#include "jitterdisc/sampler.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "jitterdisc/errors.hpp"
#include "jitterdisc/rng.hpp"

namespace jitterdisc {

std::string to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::Jittered: return "jittered";
    case SamplerKind::HalfCube: return "halfcube";
    case SamplerKind::Uniform: return "uniform";
    case SamplerKind::LatinHypercube: return "lhs";
    case SamplerKind::External: return "external";
  }
  return "external";
}

SamplerKind sampler_kind_from_string(const std::string& name) {
  if (name == "jittered") return SamplerKind::Jittered;
  if (name == "halfcube" || name == "half-cube") return SamplerKind::HalfCube;
  if (name == "uniform" || name == "mc") return SamplerKind::Uniform;
  if (name == "lhs") return SamplerKind::LatinHypercube;
  if (name == "external") return SamplerKind::External;
  throw ValidationError("unknown sampler '" + name + "'");
}

StratifiedSpec StratifiedSpec::full_grid(int m, int d) {
  if (m < 2) throw ValidationError("full grid needs m >= 2, got " + std::to_string(m));
  if (d < 1) throw ValidationError("dimension must be >= 1, got " + std::to_string(d));
  StratifiedSpec spec(Kind::FullGrid, m, d, d);
  (void)spec.cell_count();
  return spec;
}

StratifiedSpec StratifiedSpec::half_cube(int d_prime, int d) {
  if (d < 1) throw ValidationError("dimension must be >= 1, got " + std::to_string(d));
  if (d_prime < 1 || d_prime > d) {
    throw ValidationError("half-cube needs 1 <= d' <= d, got d'=" + std::to_string(d_prime) +
                          ", d=" + std::to_string(d));
  }
  StratifiedSpec spec(Kind::HalfCube, 2, d, d_prime);
  (void)spec.cell_count();
  return spec;
}

std::uint64_t StratifiedSpec::cell_count() const {
  std::uint64_t count = 1;
  const auto base = static_cast<std::uint64_t>(m_);
  for (int i = 0; i < d_prime_; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / base) {
      throw CapacityError("cell count " + std::to_string(m_) + "^" + std::to_string(d_prime_) +
                          " overflows 64 bits");
    }
    count *= base;
  }
  return count;
}

std::string StratifiedSpec::describe() const {
  if (kind_ == Kind::FullGrid) return "fullgrid(m=" + std::to_string(m_) + ",d=" + std::to_string(d_) + ")";
  return "halfcube(d'=" + std::to_string(d_prime_) + ",d=" + std::to_string(d_) + ")";
}

PointSet::PointSet(int d, std::vector<double> coords, PointSetMeta meta)
    : d_(d), coords_(std::move(coords)), meta_(std::move(meta)) {
  if (d_ < 1) throw ValidationError("dimension must be >= 1");
  if (coords_.empty()) throw ValidationError("point set must contain at least one point");
  if (coords_.size() % static_cast<std::size_t>(d_) != 0) {
    throw ValidationError("coordinate count is not a multiple of the dimension");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double c = coords_[i];
    if (!(c >= 0.0 && c < 1.0)) {
      throw ValidationError("coordinate " + std::to_string(i % static_cast<std::size_t>(d_)) + " of point " +
                            std::to_string(i / static_cast<std::size_t>(d_)) + " is outside [0,1): must be < 1");
    }
  }
}

int stratum_of(double c, int m) noexcept {
  auto j = static_cast<std::int64_t>(std::floor(c * m));
  if (j < 0) j = 0;
  if (j > m - 1) j = m - 1;
  while (j > 0 && c < grid_value(j, m)) --j;
  while (j < m - 1 && c >= grid_value(j + 1, m)) ++j;
  return static_cast<int>(j);
}

int stratified_resolution(const PointSet& points) {
  const int d = points.dim();
  const std::size_t n = points.size();
  int m = 0;
  if (const auto& spec = points.meta().spec; spec && spec->kind() == StratifiedSpec::Kind::FullGrid) {
    m = spec->m();
  } else {
    m = static_cast<int>(std::llround(std::pow(static_cast<double>(n), 1.0 / d)));
    for (int cand : {m - 1, m, m + 1}) {
      if (cand < 2) continue;
      std::uint64_t p = 1;
      for (int i = 0; i < d && p <= n; ++i) p *= static_cast<std::uint64_t>(cand);
      if (p == n) {
        m = cand;
        break;
      }
    }
  }
  std::uint64_t cells = 1;
  for (int i = 0; i < d && m >= 2; ++i) {
    cells *= static_cast<std::uint64_t>(m);
    if (cells > n) break;
  }
  if (m < 2 || cells != n) {
    throw ValidationError("point set of " + std::to_string(n) + " points in dimension " + std::to_string(d) +
                          " is not a full m-grid jittered set (N != m^d)");
  }
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t idx = 0;
    for (int a = d - 1; a >= 0; --a) {
      idx = idx * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(stratum_of(points.coord(i, a), m));
    }
    if (seen[idx]) {
      throw ValidationError("point set is not stratified on the m-grid (m=" + std::to_string(m) +
                            "): two points share a cube");
    }
    seen[idx] = 1;
  }
  return m;
}

double place_in_stratum(std::int64_t j, std::int64_t m, double offset) noexcept {
  const double lo = grid_value(j, m);
  const double hi = grid_value(j + 1, m);
  double c = lo + offset * (1.0 / static_cast<double>(m));
  if (c >= hi) c = std::nextafter(hi, 0.0);
  if (c < lo) c = lo;
  // Keep floor(m*c) == j as well; only reachable within an ulp of a boundary.
  while (std::floor(c * static_cast<double>(m)) < static_cast<double>(j) && std::nextafter(c, 1.0) < hi) {
    c = std::nextafter(c, 1.0);
  }
  while (std::floor(c * static_cast<double>(m)) > static_cast<double>(j) && c > lo) {
    c = std::nextafter(c, 0.0);
  }
  return c;
}

namespace {

void check_capacity(std::uint64_t n, const SamplerLimits& limits) {
  if (n > limits.max_points) {
    throw CapacityError("requested " + std::to_string(n) + " points exceeds the cap of " +
                        std::to_string(limits.max_points));
  }
}

PointSet generate_cells(const StratifiedSpec& spec, std::uint64_t seed, const SamplerLimits& limits,
                        SamplerKind kind) {
  const std::uint64_t n = spec.cell_count();
  check_capacity(n, limits);
  const int d = spec.dim();
  std::vector<double> coords(n * static_cast<std::uint64_t>(d));
  for (std::uint64_t cell = 0; cell < n; ++cell) {
    SplitMix64 stream(derive_seed(seed, cell));
    std::uint64_t rest = cell;
    for (int a = 0; a < d; ++a) {
      const int div = spec.divisions(a);
      const auto j = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(div));
      rest /= static_cast<std::uint64_t>(div);
      coords[cell * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(a)] =
          place_in_stratum(j, div, stream.uniform01());
    }
  }
  return PointSet(d, std::move(coords), PointSetMeta{kind, spec, seed});
}

void check_count(std::size_t n, int d) {
  if (n == 0) throw ValidationError("number of points must be >= 1");
  if (d < 1) throw ValidationError("dimension must be >= 1");
}

}  // namespace

PointSet generate_jittered(const StratifiedSpec& spec, std::uint64_t seed, const SamplerLimits& limits) {
  if (spec.kind() != StratifiedSpec::Kind::FullGrid) throw ValidationError("generate_jittered needs a FullGrid spec");
  return generate_cells(spec, seed, limits, SamplerKind::Jittered);
}

PointSet generate_half_cube(const StratifiedSpec& spec, std::uint64_t seed, const SamplerLimits& limits) {
  if (spec.kind() != StratifiedSpec::Kind::HalfCube) throw ValidationError("generate_half_cube needs a HalfCube spec");
  return generate_cells(spec, seed, limits, SamplerKind::HalfCube);
}

PointSet generate_stratified(const StratifiedSpec& spec, std::uint64_t seed, const SamplerLimits& limits) {
  return spec.kind() == StratifiedSpec::Kind::FullGrid ? generate_jittered(spec, seed, limits)
                                                       : generate_half_cube(spec, seed, limits);
}

PointSet generate_uniform(std::size_t n, int d, std::uint64_t seed, const SamplerLimits& limits) {
  check_count(n, d);
  check_capacity(n, limits);
  std::vector<double> coords(n * static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < n; ++i) {
    SplitMix64 stream(derive_seed(seed, i));
    for (int a = 0; a < d; ++a) coords[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)] = stream.uniform01();
  }
  return PointSet(d, std::move(coords), PointSetMeta{SamplerKind::Uniform, std::nullopt, seed});
}

PointSet generate_lhs(std::size_t n, int d, std::uint64_t seed, const SamplerLimits& limits) {
  check_count(n, d);
  check_capacity(n, limits);
  std::vector<double> coords(n * static_cast<std::size_t>(d));
  std::vector<std::int64_t> strata(n);
  for (int a = 0; a < d; ++a) {
    // Fisher-Yates with an explicit bounded draw so the permutation does not
    // depend on the standard library's distribution implementation.
    SplitMix64 perm(derive_seed(seed, static_cast<std::uint64_t>(a)));
    std::iota(strata.begin(), strata.end(), std::int64_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(strata[i - 1], strata[perm.below(i)]);
    SplitMix64 offsets(derive_seed(~seed, static_cast<std::uint64_t>(a)));
    for (std::size_t i = 0; i < n; ++i) {
      coords[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)] =
          place_in_stratum(strata[i], static_cast<std::int64_t>(n), offsets.uniform01());
    }
  }
  return PointSet(d, std::move(coords), PointSetMeta{SamplerKind::LatinHypercube, std::nullopt, seed});
}

}  // namespace jitterdisc
