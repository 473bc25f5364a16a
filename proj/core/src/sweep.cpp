#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "jitterdisc/bounds.hpp"
#include "jitterdisc/errors.hpp"
#include "jitterdisc/harness.hpp"
#include "jitterdisc/rng.hpp"
#include "jitterdisc/sampler.hpp"
#include "jitterdisc/stats.hpp"
#include "jitterdisc/witness.hpp"

namespace jitterdisc {

std::string to_string(DiscMethod method) {
  switch (method) {
    case DiscMethod::Exact: return "exact";
    case DiscMethod::Heuristic: return "heuristic";
    case DiscMethod::Certified: return "certified";
  }
  return "exact";
}

DiscMethod disc_method_from_string(const std::string& name) {
  if (name == "exact") return DiscMethod::Exact;
  if (name == "heuristic") return DiscMethod::Heuristic;
  if (name == "certified") return DiscMethod::Certified;
  throw ValidationError("unknown discrepancy method '" + name + "'");
}

namespace {

std::optional<StratifiedSpec> spec_for(SamplerKind sampler, const GridPoint& p) {
  switch (sampler) {
    case SamplerKind::Jittered: return StratifiedSpec::full_grid(p.param, p.d);
    case SamplerKind::HalfCube: return StratifiedSpec::half_cube(p.param, p.d);
    default: return std::nullopt;
  }
}

std::string describe(SamplerKind sampler, std::size_t index, const GridPoint& p) {
  const char* name = sampler == SamplerKind::Jittered ? "m" : sampler == SamplerKind::HalfCube ? "d'" : "n";
  return "grid point " + std::to_string(index) + " (" + name + "=" + std::to_string(p.param) +
         ", d=" + std::to_string(p.d) + ")";
}

CoverSpec cover_for(const SweepConfig& config, int d) {
  if (config.cover_grid > 0) return CoverSpec::from_grid(config.cover_grid, d);
  if (config.cover_delta > 0.0) return CoverSpec::from_delta(config.cover_delta, d);
  throw ValidationError("certified method needs [certified] grid or delta");
}

PointSet generate(SamplerKind sampler, const GridPoint& p, std::uint64_t seed) {
  switch (sampler) {
    case SamplerKind::Jittered:
    case SamplerKind::HalfCube: return generate_stratified(*spec_for(sampler, p), seed);
    case SamplerKind::Uniform: return generate_uniform(static_cast<std::size_t>(p.param), p.d, seed);
    case SamplerKind::LatinHypercube: return generate_lhs(static_cast<std::size_t>(p.param), p.d, seed);
    case SamplerKind::External: break;
  }
  throw ValidationError("sampler 'external' cannot be used in a sweep");
}

}  // namespace

std::uint64_t grid_point_size(SamplerKind sampler, const GridPoint& p) {
  if (auto spec = spec_for(sampler, p)) return spec->cell_count();
  if (p.param < 1) throw ValidationError("number of points must be >= 1");
  if (p.d < 1) throw ValidationError("dimension must be >= 1");
  return static_cast<std::uint64_t>(p.param);
}

void validate_sweep_config(const SweepConfig& config) {
  if (config.grid.empty()) throw ValidationError("sweep grid is empty");
  if (config.replications < 1) throw ValidationError("replications must be >= 1");
  if (config.sampler == SamplerKind::External) throw ValidationError("sampler 'external' cannot be used in a sweep");
  if (config.method == DiscMethod::Heuristic && config.restarts < 1) throw ValidationError("restarts must be >= 1");
  const SamplerLimits limits;
  for (std::size_t g = 0; g < config.grid.size(); ++g) {
    const GridPoint& p = config.grid[g];
    const std::string where = describe(config.sampler, g, p);
    std::uint64_t n = 0;
    try {
      n = grid_point_size(config.sampler, p);
    } catch (const std::exception& e) {
      throw ValidationError(where + ": " + e.what());
    }
    if (n > limits.max_points) throw ValidationError(where + ": " + std::to_string(n) + " points exceed the sampler cap");
    if (config.method == DiscMethod::Exact && !exact_feasible(p.d, n, ExactOptions{config.exact_budget})) {
      throw ValidationError(where + ": exact infeasible (work estimate " +
                            std::to_string(exact_work_estimate(p.d, n)) + " over budget)");
    }
    if (config.method == DiscMethod::Certified) {
      const CoverSpec cover = cover_for(config, p.d);
      if (std::pow(cover.grid() + 1.0, p.d) > CertifiedOptions{}.corner_budget) {
        throw ValidationError(where + ": certified cover M=" + std::to_string(cover.grid()) + " too large");
      }
    }
  }
}

SweepRecord aggregate_replications(const SweepRecord& prototype, const std::vector<ReplicationRow>& rows) {
  SweepRecord rec = prototype;
  std::vector<double> disc;
  std::vector<double> norm;
  std::vector<double> wit;
  disc.reserve(rows.size());
  norm.reserve(rows.size());
  for (const auto& row : rows) {
    disc.push_back(row.disc);
    norm.push_back(row.normalized);
    if (row.witness) wit.push_back(*row.witness);
  }
  const auto s = summarize(disc);
  rec.replications = rows.size();
  rec.mean_disc = s.mean;
  rec.std_disc = s.std;
  rec.ci95_lo = s.ci95_lo;
  rec.ci95_hi = s.ci95_hi;
  rec.mean_normalized = summarize(norm).mean;
  rec.witness_mean = wit.empty() ? std::nullopt : std::optional<double>(summarize(wit).mean);
  return rec;
}

SweepResult run_sweep(const SweepConfig& config) {
  validate_sweep_config(config);
  const unsigned threads = resolve_threads(config.threads);
  SweepResult result;
  for (std::size_t g = 0; g < config.grid.size(); ++g) {
    const GridPoint& p = config.grid[g];
    const std::uint64_t grid_seed = derive_seed(config.seed, g);
    const std::uint64_t n = grid_point_size(config.sampler, p);
    const bool jittered = config.sampler == SamplerKind::Jittered;
    const std::optional<CoverSpec> cover =
        config.method == DiscMethod::Certified ? std::optional<CoverSpec>(cover_for(config, p.d)) : std::nullopt;

    std::vector<ReplicationRow> rows(config.replications);
    parallel_for(config.replications, threads, [&](std::size_t rep) {
      const std::uint64_t seed = derive_seed(grid_seed, rep);
      const PointSet pts = generate(config.sampler, p, seed);
      DiscrepancyEstimate est;
      switch (config.method) {
        case DiscMethod::Exact: est = star_disc_exact(pts, ExactOptions{config.exact_budget}); break;
        case DiscMethod::Heuristic:
          est = star_disc_heuristic(pts, HeuristicOptions{config.restarts, derive_seed(seed, 0x6865757269737469ULL)});
          break;
        case DiscMethod::Certified: est = star_disc_certified_upper(pts, *cover); break;
      }
      ReplicationRow& row = rows[rep];
      row.grid_index = g;
      row.replication = rep;
      row.seed = seed;
      row.disc = est.value;
      row.normalized = normalized(est, pts.size());
      if (jittered) {
        row.witness = p.param >= p.d ? witness_discrete(pts).total : witness_smallm(pts).total;
      }
    });

    SweepRecord proto;
    if (jittered) proto.m = p.param;
    if (config.sampler == SamplerKind::HalfCube) proto.m = 2;
    proto.d = p.d;
    proto.n = n;
    proto.sampler = config.sampler;
    proto.method = config.method;
    proto.seed = grid_seed;
    if (jittered && p.param >= 2 && p.d >= 2) {
      const auto ub = upper_thm_bound(p.param, p.d);
      if (ub.applicable) proto.bound_upper = ub.value;
      double lower = smallm_lower_bound(p.param, p.d).value;
      if (p.param / p.d >= 2) {
        const auto lm = lower_main_bound(p.param, p.d);
        if (lm.applicable) lower = std::max(lower, lm.value);
      }
      proto.bound_lower = lower;
    }
    result.records.push_back(aggregate_replications(proto, rows));
    result.replications.insert(result.replications.end(), rows.begin(), rows.end());
  }

  if (!config.output.empty()) write_sweep_csv(config.output, result.records, config.deterministic);
  if (!config.replication_log.empty()) {
    std::ofstream log(config.replication_log, std::ios::binary);
    if (!log) throw std::runtime_error("cannot open '" + config.replication_log.string() + "' for writing");
    write_replication_log(log, result.replications);
  }
  return result;
}

}  // namespace jitterdisc
