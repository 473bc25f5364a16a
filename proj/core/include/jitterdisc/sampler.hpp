#pragma once

#include <cstddef>
#include <cstdint>

#include "jitterdisc/point_set.hpp"

namespace jitterdisc {

struct SamplerLimits {
  std::uint64_t max_points = std::uint64_t{1} << 24;
};

/// One uniform point in each m-cube. Point i belongs to the cell with
/// mixed-radix index i (axis 0 fastest) and is drawn from the stream
/// derive_seed(seed, i), so the output does not depend on generation order.
PointSet generate_jittered(const StratifiedSpec& spec, std::uint64_t seed, const SamplerLimits& limits = {});

/// One uniform point in each half-cube box B_x; same stream layout.
PointSet generate_half_cube(const StratifiedSpec& spec, std::uint64_t seed, const SamplerLimits& limits = {});

/// Dispatches on spec.kind().
PointSet generate_stratified(const StratifiedSpec& spec, std::uint64_t seed, const SamplerLimits& limits = {});

/// n i.i.d. uniform points (Monte Carlo).
PointSet generate_uniform(std::size_t n, int d, std::uint64_t seed, const SamplerLimits& limits = {});

/// Unscrambled Latin hypercube: per axis an independent uniform permutation
/// of the n strata, one uniform offset per point and axis.
PointSet generate_lhs(std::size_t n, int d, std::uint64_t seed, const SamplerLimits& limits = {});

/// Uniform point of [j/m, (j+1)/m) from a 53-bit offset in [0,1). The result
/// satisfies grid_value(j,m) <= c < grid_value(j+1,m) and floor(m*c) == j.
double place_in_stratum(std::int64_t j, std::int64_t m, double offset) noexcept;

}  // namespace jitterdisc
