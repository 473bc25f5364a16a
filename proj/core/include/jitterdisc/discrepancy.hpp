#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jitterdisc/point_set.hpp"

namespace jitterdisc {

/// Treatment of a rectangle's upper face: p < hi (Strict) or p <= hi (Closed).
/// A closed face realises the right limit of a half-open box.
enum class Closure { Strict, Closed };

/// Half-open axis-aligned rectangle [lo, hi) in [0,1]^d.
struct AxisRect {
  std::vector<double> lo;
  std::vector<double> hi;

  /// Throws ValidationError unless 0 <= lo_i <= hi_i <= 1 and sizes agree.
  AxisRect(std::vector<double> lo, std::vector<double> hi);

  /// [0, corner).
  static AxisRect anchored(std::vector<double> corner);

  int dim() const noexcept { return static_cast<int>(lo.size()); }
  /// Sequential product of side lengths in axis order.
  double volume() const noexcept;
};

/// |P ∩ rect| - N·λ(rect). `closure` is either empty (all Strict) or has
/// one entry per axis.
double signed_disc(const PointSet& points, const AxisRect& rect, std::span<const Closure> closure = {});

enum class EstimateKind { Exact, LowerWitness, CertifiedUpper };
/// Overfull: disc+ = count_closed(y) - N·vol(y). Underfull: disc- = N·vol(y) - count_strict(y).
enum class Side { Overfull, Underfull };

std::string to_string(EstimateKind kind);
std::string to_string(Side side);

struct BoxWitness {
  std::vector<double> corner;
  Side side = Side::Overfull;
};

struct DiscrepancyEstimate {
  double value = 0.0;
  EstimateKind kind = EstimateKind::Exact;
  std::optional<BoxWitness> witness;
  /// Bracketing gap of the cover, CertifiedUpper only.
  std::optional<double> delta;
};

/// disc+ and disc- at one corner, evaluated with the same arithmetic as all
/// engines (volume = sequential product, then N·volume).
double overfull_disc(const PointSet& points, std::span<const double> corner);
double underfull_disc(const PointSet& points, std::span<const double> corner);

struct ExactOptions {
  /// Upper bound on exact_work_estimate(); larger inputs are rejected.
  double work_budget = 1.0e9;
};

/// Rough operation count of the exact engine for N points in dimension d.
double exact_work_estimate(int d, std::size_t n);
bool exact_feasible(int d, std::size_t n, const ExactOptions& options = {});

/// Star discrepancy sup_x |disc([0,x))| by critical-grid enumeration
/// (per-axis coordinates plus 1.0). Dimensions 1 and 2 use a sorted sweep;
/// higher dimensions recurse over the leading axes with candidates pruned to
/// the coordinates of still-active points and finish with the 2-D sweep.
/// Throws InfeasibleError when the work estimate exceeds the budget.
DiscrepancyEstimate star_disc_exact(const PointSet& points, const ExactOptions& options = {});

struct HeuristicOptions {
  int restarts = 16;
  std::uint64_t seed = 0;
};

/// Multi-restart coordinate ascent on the critical grid for both disc+ and
/// disc-. Returns a valid lower bound on D*(P), deterministic per seed.
DiscrepancyEstimate star_disc_heuristic(const PointSet& points, const HeuristicOptions& options = {});

/// Equidistant grid {0, 1/M, ..., 1}^d used as a bracketing cover.
class CoverSpec {
 public:
  /// Smallest M with 1 - (1 - 1/M)^d <= delta.
  static CoverSpec from_delta(double delta, int d);
  static CoverSpec from_grid(int grid, int d);

  int grid() const noexcept { return grid_; }
  int dim() const noexcept { return d_; }
  /// Exact bracketing gap 1 - (1 - 1/M)^d.
  double delta() const noexcept { return delta_; }

 private:
  CoverSpec(int grid, int d, double delta) : grid_(grid), d_(d), delta_(delta) {}
  int grid_;
  int d_;
  double delta_;
};

struct CertifiedOptions {
  /// Maximum number of grid corners (M+1)^d.
  double corner_budget = 16777216.0;
};

/// max over cover corners of max(disc+, disc-) plus N·delta; always >= D*(P).
DiscrepancyEstimate star_disc_certified_upper(const PointSet& points, const CoverSpec& cover,
                                              const CertifiedOptions& options = {});

/// value / N.
double normalized(const DiscrepancyEstimate& estimate, std::size_t n);

}  // namespace jitterdisc
