#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jitterdisc/discrepancy.hpp"
#include "jitterdisc/point_set.hpp"

namespace jitterdisc {

enum class DiscMethod { Exact, Heuristic, Certified };

std::string to_string(DiscMethod method);
DiscMethod disc_method_from_string(const std::string& name);

/// One sweep point. `param` is m for the jittered sampler, d' for the
/// half-cube sampler and n for the uniform and Latin hypercube samplers.
struct GridPoint {
  int param = 0;
  int d = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct SweepConfig {
  SamplerKind sampler = SamplerKind::Jittered;
  std::vector<GridPoint> grid;
  std::size_t replications = 100;
  DiscMethod method = DiscMethod::Exact;
  int restarts = 16;
  /// Certified cover: explicit M, or derived from delta when grid is 0.
  int cover_grid = 0;
  double cover_delta = 0.0;
  double exact_budget = ExactOptions{}.work_budget;
  std::uint64_t seed = 0;
  std::filesystem::path output;
  std::filesystem::path replication_log;
  unsigned threads = 0;
  bool deterministic = false;
};

/// Parses the flat key = value format:
///
///   [sweep]
///   sampler = jittered        ; jittered | halfcube | uniform | lhs
///   grid = 8x2, 16x2          ; param x d pairs
///   replications = 200
///   method = exact            ; exact | heuristic | certified
///   seed = 2024
///   output = sweep.csv        ; optional
///   log = reps.csv            ; optional per-replication log
///   threads = 0               ; optional, 0 = auto
///   deterministic = true      ; optional
///   [heuristic]
///   restarts = 20
///   [certified]
///   grid = 64                 ; or delta = 0.05
///   [exact]
///   budget = 1e9
///
/// Unknown sections or keys are rejected. Throws ParseError.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Number of points at a grid point for the configured sampler.
std::uint64_t grid_point_size(SamplerKind sampler, const GridPoint& point);

/// Fail-fast check of every grid point against the sampler limits and the
/// chosen method's feasibility guard. Throws ValidationError naming the
/// first offending point.
void validate_sweep_config(const SweepConfig& config);

struct SweepRecord {
  std::optional<int> m;
  int d = 0;
  std::uint64_t n = 0;
  SamplerKind sampler = SamplerKind::Jittered;
  DiscMethod method = DiscMethod::Exact;
  std::size_t replications = 0;
  double mean_disc = 0.0;
  double std_disc = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  double mean_normalized = 0.0;
  std::optional<double> witness_mean;
  std::optional<double> bound_lower;
  std::optional<double> bound_upper;
  std::uint64_t seed = 0;
};

struct ReplicationRow {
  std::size_t grid_index = 0;
  std::size_t replication = 0;
  std::uint64_t seed = 0;
  double disc = 0.0;
  double normalized = 0.0;
  std::optional<double> witness;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<ReplicationRow> replications;
};

/// Runs every grid point. Grid point g uses seed derive_seed(config.seed, g)
/// and replication r of it derive_seed(that, r); each replication is a pure
/// function of its seed and results are reduced in index order, so the
/// output does not depend on the thread count. Writes the CSV (and the
/// replication log) when paths are configured.
SweepResult run_sweep(const SweepConfig& config);

/// Re-derives a grid point's aggregates from its replication rows.
SweepRecord aggregate_replications(const SweepRecord& prototype, const std::vector<ReplicationRow>& rows);

inline constexpr const char* kSweepCsvHeader =
    "m,d,N,sampler,method,R,mean_disc,std_disc,ci95_lo,ci95_hi,mean_normalized,witness_mean,bound_lower,bound_upper,"
    "seed";

/// Writes the header, then one row per record. Outside deterministic mode
/// a leading "# generated <UTC timestamp>" comment line is added.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, bool deterministic);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRecord>& records, bool deterministic);
/// Skips '#' comment lines. Throws ParseError with the line number.
std::vector<SweepRecord> read_sweep_csv(std::istream& in);
std::vector<SweepRecord> read_sweep_csv(const std::filesystem::path& path);

void write_replication_log(std::ostream& out, const std::vector<ReplicationRow>& rows);
std::vector<ReplicationRow> read_replication_log(std::istream& in);

struct CollapseGroup {
  SamplerKind sampler = SamplerKind::Jittered;
  int d = 0;
  /// m for jittered rows, N otherwise.
  std::vector<double> params;
  std::vector<double> ratios;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double spread = 1.0;
  bool pass = false;
};

struct CollapseReport {
  double threshold = 1.5;
  std::vector<CollapseGroup> groups;
  bool pass = false;
};

/// Groups records by (sampler, d) and divides mean_disc by the expected
/// rate: d m^{(d-1)/2} sqrt(1 + ln(m/d)) for jittered rows, sqrt(d N) for
/// the others. A group passes when max/min <= threshold.
CollapseReport collapse_analysis(const std::vector<SweepRecord>& records, double threshold = 1.5);

/// Hardy-Krause variation (anchored at 1) of f(x) = prod x_i on [0,1]^d.
///
/// For a non-empty u ⊆ {1..d}, the restriction of f to the face x_j = 1
/// (j not in u) is prod_{i in u} x_i, whose mixed derivative ∂^u is 1, so its
/// Vitali variation is ∫_{[0,1]^u} 1 = 1. Summing over the 2^d - 1 faces
/// gives V_HK(f) = 2^d - 1.
double product_integrand_variation(int d);

struct KhOptions {
  ExactOptions exact;
  /// Cover used when the exact engine is infeasible.
  int fallback_cover_grid = 64;
};

struct KhReport {
  int d = 0;
  std::size_t n = 0;
  double integral = 0.0;
  double estimate = 0.0;
  double error = 0.0;
  double dstar = 0.0;
  double dstar_normalized = 0.0;
  EstimateKind dstar_kind = EstimateKind::Exact;
  double variation = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// Koksma-Hlawka check for f(x) = prod x_i (integral 2^{-d}):
/// |integral - mean f(P)| <= (D*(P)/N) · V_HK(f).
KhReport kh_demo(const PointSet& points, const KhOptions& options = {});

}  // namespace jitterdisc
