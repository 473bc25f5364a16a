#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jitterdisc/discrepancy.hpp"
#include "jitterdisc/point_set.hpp"

namespace jitterdisc {

enum class WitnessScheme { Construct, DiscreteLowerMain, SmallM };

std::string to_string(WitnessScheme scheme);
WitnessScheme witness_scheme_from_string(const std::string& name);

/// Lower-bound construction on a jittered point set.
///
/// For each axis i a slice R_i = [0,r)^{i-1} x [r_i, S_i) x [0,r)^{d-i} is
/// chosen from the points in its slab only; the witness box is
/// B = prod [0, S_i). `total` is sum disc(R_i). The counting identity
/// disc(B) = total + disc(B \ union R_i) holds for every realisation, and the
/// leftover term has mean zero, so E disc(B) = E total. `box_disc` is the
/// per-realisation certificate: |box_disc| <= D*(P).
struct WitnessResult {
  WitnessScheme scheme = WitnessScheme::Construct;
  int m = 0;
  std::vector<double> r;
  std::vector<double> box;
  /// Upper-face convention of each S_i in the box and its slice.
  std::vector<Closure> closure;
  std::vector<double> per_dim_disc;
  std::vector<AxisRect> slices;
  double total = 0.0;
  double box_disc = 0.0;

  AxisRect box_rect() const { return AxisRect::anchored(box); }
};

/// r_i must be integer multiples of 1/m in [0,1). S_i maximises the slice
/// discrepancy over the slab's point coordinates (closed face) and 1.0,
/// taking the largest maximiser.
WitnessResult witness_construct(const PointSet& points, std::span<const double> r);

/// k = floor(m/d), r = (m-k)/m. Per axis the best of the k half-cell slabs
/// U_j = [r, r + j/m + 1/(2m)), clamped at zero by the empty choice S_i = r.
WitnessResult witness_discrete(const PointSet& points);

/// r = (m-1)/m. Per axis the half-cell slab [r, r + 1/(2m)), or, when
/// N' = (m-1)^{d-1} < 16, the thin slab [r, r + 1/(2 N' m)] with a closed face.
WitnessResult witness_smallm(const PointSet& points);

WitnessResult run_witness(const PointSet& points, WitnessScheme scheme, std::span<const double> r = {});

/// |P ∩ T_j| for j = 0..k-1 along `axis`, T_j = [y_j, z_j) x [0,r)^{d-1}
/// with the discrete scheme's k, r, y_j, z_j.
std::vector<std::size_t> half_slab_counts(const PointSet& points, int axis);

struct ZeroMeanRow {
  AxisRect rect;
  double mean = 0.0;
  double std = 0.0;
  bool pass = false;
};

struct ZeroMeanReport {
  std::size_t replications = 0;
  std::vector<ZeroMeanRow> rows;
  std::size_t passed = 0;
};

/// `count` anchored boxes [0, y) with y uniform in [0,1)^d; box q draws
/// from the stream derive_seed(seed, q).
std::vector<AxisRect> random_anchored_boxes(int d, std::size_t count, std::uint64_t seed);

/// Replicates the stratified sampler R times (replication r uses seed
/// derive_seed(seed, r)) and checks |mean signed disc| <= 4·std/√R for
/// each rectangle (Strict faces). A rectangle whose discrepancy is zero in
/// every replication up to rounding (|mean| <= 1e-9 N) also passes.
/// Requires R >= 1000.
ZeroMeanReport mean_disc_is_zero_test(const StratifiedSpec& spec, std::span<const AxisRect> rects,
                                      std::size_t replications, std::uint64_t seed, unsigned threads = 1);

}  // namespace jitterdisc
