#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jitterdisc {

enum class SamplerKind { Jittered, HalfCube, Uniform, LatinHypercube, External };

std::string to_string(SamplerKind kind);
SamplerKind sampler_kind_from_string(const std::string& name);

/// Partition of [0,1)^d into equal-volume boxes with one random point each.
///
/// FullGrid(m, d): the m^d half-open cubes of side 1/m.
/// HalfCube(d', d): the 2^d' boxes prod_{i<d'} [x_i, x_i + 1/2) x [0,1)^{d-d'}.
///
/// Both are described uniformly through `divisions(axis)`, the number of
/// strata along that axis (m, or 2 / 1 for the half-cube variant).
class StratifiedSpec {
 public:
  enum class Kind { FullGrid, HalfCube };

  static StratifiedSpec full_grid(int m, int d);
  static StratifiedSpec half_cube(int d_prime, int d);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return d_; }
  /// Side resolution m for FullGrid; 2 for HalfCube.
  int m() const noexcept { return m_; }
  /// d' for HalfCube; d for FullGrid.
  int stratified_dims() const noexcept { return d_prime_; }
  int divisions(int axis) const noexcept { return axis < d_prime_ ? m_ : 1; }

  /// m^d or 2^d'. Throws CapacityError if it does not fit in 64 bits.
  std::uint64_t cell_count() const;

  std::string describe() const;

  friend bool operator==(const StratifiedSpec&, const StratifiedSpec&) = default;

 private:
  StratifiedSpec(Kind kind, int m, int d, int d_prime) : kind_(kind), m_(m), d_(d), d_prime_(d_prime) {}

  Kind kind_;
  int m_;
  int d_;
  int d_prime_;
};

struct PointSetMeta {
  SamplerKind sampler = SamplerKind::External;
  std::optional<StratifiedSpec> spec;
  std::uint64_t seed = 0;
};

/// N >= 1 points in [0,1)^d, stored row-major.
class PointSet {
 public:
  /// Throws ValidationError unless d >= 1, coords.size() is a positive
  /// multiple of d and every coordinate lies in [0, 1).
  PointSet(int d, std::vector<double> coords, PointSetMeta meta = {});

  int dim() const noexcept { return d_; }
  std::size_t size() const noexcept { return coords_.size() / static_cast<std::size_t>(d_); }

  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_)};
  }
  double coord(std::size_t i, int axis) const noexcept {
    return coords_[i * static_cast<std::size_t>(d_) + static_cast<std::size_t>(axis)];
  }
  std::span<const double> coords() const noexcept { return coords_; }
  const PointSetMeta& meta() const noexcept { return meta_; }

 private:
  int d_;
  std::vector<double> coords_;
  PointSetMeta meta_;
};

/// The grid value j/m, correctly rounded. Every grid boundary in the
/// library is produced by this function so that comparisons agree.
inline double grid_value(std::int64_t j, std::int64_t m) noexcept {
  return static_cast<double>(j) / static_cast<double>(m);
}

/// Index j of the stratum [j/m, (j+1)/m) containing c, using the same
/// rounded boundaries as `grid_value`.
int stratum_of(double c, int m) noexcept;

/// Side resolution m of a stratified point set: taken from the metadata
/// when present, otherwise inferred from N = m^d. Throws ValidationError if
/// the set does not hold exactly one point in every m-cube.
int stratified_resolution(const PointSet& points);

}  // namespace jitterdisc
