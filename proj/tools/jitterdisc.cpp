// Command-line front end for the jitterdisc library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jitterdisc/binom.hpp"
#include "jitterdisc/bounds.hpp"
#include "jitterdisc/discrepancy.hpp"
#include "jitterdisc/errors.hpp"
#include "jitterdisc/harness.hpp"
#include "jitterdisc/io.hpp"
#include "jitterdisc/rng.hpp"
#include "jitterdisc/sampler.hpp"
#include "jitterdisc/stats.hpp"
#include "jitterdisc/witness.hpp"

using json = nlohmann::ordered_json;
using namespace jitterdisc;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPropertyFailure = 2;

struct Globals {
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned threads = 0;
  bool deterministic = false;
  bool json = false;
};

json envelope() { return json{{"schema_version", 1}}; }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string fmt(double v) { return format_double(v); }

json estimate_json(const DiscrepancyEstimate& est, std::size_t n) {
  json j = envelope();
  j["value"] = est.value;
  j["kind"] = to_string(est.kind);
  j["normalized"] = normalized(est, n);
  if (est.witness) {
    j["witness"] = {{"corner", est.witness->corner}, {"side", to_string(est.witness->side)}};
  } else {
    j["witness"] = nullptr;
  }
  j["delta"] = est.delta ? json(*est.delta) : json(nullptr);
  return j;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_double(item));
  return out;
}

json bound_json(const BoundValue& b) {
  return {{"formula", to_string(b.formula)}, {"value", b.value}, {"applicable", b.applicable}, {"reason", b.reason}};
}

// ---- gen

struct GenArgs {
  std::string sampler = "jittered";
  int m = 0;
  int d = 0;
  int dprime = 0;
  std::size_t n = 0;
  std::string out;
};

int run_gen(const Globals& g, const GenArgs& a) {
  const SamplerKind kind = sampler_kind_from_string(a.sampler);
  std::optional<PointSet> pts;
  switch (kind) {
    case SamplerKind::Jittered: pts = generate_jittered(StratifiedSpec::full_grid(a.m, a.d), g.seed); break;
    case SamplerKind::HalfCube: pts = generate_half_cube(StratifiedSpec::half_cube(a.dprime, a.d), g.seed); break;
    case SamplerKind::Uniform: pts = generate_uniform(a.n, a.d, g.seed); break;
    case SamplerKind::LatinHypercube: pts = generate_lhs(a.n, a.d, g.seed); break;
    case SamplerKind::External: throw ValidationError("cannot generate an external point set");
  }
  if (a.out.empty() || a.out == "-") {
    write_point_set(std::cout, *pts);
  } else {
    write_point_set(std::filesystem::path(a.out), *pts);
    if (g.json) {
      json j = envelope();
      j["path"] = a.out;
      j["d"] = pts->dim();
      j["N"] = pts->size();
      j["sampler"] = a.sampler;
      j["seed"] = g.seed;
      emit(j);
    }
  }
  return kExitPass;
}

// ---- disc

struct DiscArgs {
  std::string in;
  std::string method = "exact";
  int restarts = HeuristicOptions{}.restarts;
  int grid = 0;
  double delta = 0.0;
  double budget = ExactOptions{}.work_budget;
};

int run_disc(const Globals& g, const DiscArgs& a) {
  const PointSet pts = read_point_set(std::filesystem::path(a.in));
  DiscrepancyEstimate est;
  switch (disc_method_from_string(a.method)) {
    case DiscMethod::Exact: est = star_disc_exact(pts, ExactOptions{a.budget}); break;
    case DiscMethod::Heuristic: est = star_disc_heuristic(pts, HeuristicOptions{a.restarts, g.seed}); break;
    case DiscMethod::Certified: {
      if (a.grid <= 0 && a.delta <= 0.0) throw ValidationError("certified method needs --grid or --delta");
      const CoverSpec cover =
          a.grid > 0 ? CoverSpec::from_grid(a.grid, pts.dim()) : CoverSpec::from_delta(a.delta, pts.dim());
      est = star_disc_certified_upper(pts, cover);
      break;
    }
  }
  if (g.json) {
    emit(estimate_json(est, pts.size()));
  } else {
    std::cout << to_string(est.kind) << ' ' << fmt(est.value) << " (normalized " << fmt(normalized(est, pts.size()))
              << ")\n";
    if (est.witness) {
      std::cout << "corner";
      for (double c : est.witness->corner) std::cout << ' ' << fmt(c);
      std::cout << "  side " << to_string(est.witness->side) << '\n';
    }
    if (est.delta) std::cout << "delta " << fmt(*est.delta) << '\n';
  }
  return kExitPass;
}

// ---- witness

struct WitnessArgs {
  std::string in;
  std::string scheme = "discrete";
  std::string r;
};

int run_witness_cmd(const Globals& g, const WitnessArgs& a) {
  const PointSet pts = read_point_set(std::filesystem::path(a.in));
  const WitnessScheme scheme = witness_scheme_from_string(a.scheme);
  const std::vector<double> r = a.r.empty() ? std::vector<double>{} : parse_list(a.r);
  if (scheme == WitnessScheme::Construct && r.empty()) throw ValidationError("scheme construct needs --r");
  const WitnessResult w = run_witness(pts, scheme, r);
  if (g.json) {
    json j = envelope();
    j["scheme"] = to_string(w.scheme);
    j["m"] = w.m;
    j["r"] = w.r;
    j["box"] = w.box;
    std::vector<std::string> closure;
    for (auto c : w.closure) closure.push_back(c == Closure::Closed ? "closed" : "strict");
    j["closure"] = closure;
    j["per_dim_disc"] = w.per_dim_disc;
    j["total"] = w.total;
    j["box_disc"] = w.box_disc;
    emit(j);
  } else {
    std::cout << "scheme " << to_string(w.scheme) << "  m " << w.m << '\n';
    for (std::size_t i = 0; i < w.box.size(); ++i) {
      std::cout << "axis " << i << "  r " << fmt(w.r[i]) << "  S " << fmt(w.box[i]) << "  disc "
                << fmt(w.per_dim_disc[i]) << '\n';
    }
    std::cout << "total " << fmt(w.total) << "  box_disc " << fmt(w.box_disc) << '\n';
  }
  return kExitPass;
}

// ---- zerotest

struct ZeroArgs {
  int m = 0;
  int d = 0;
  int half_cube = 0;
  std::size_t reps = 1000;
  std::size_t boxes = 10;
};

int run_zerotest(const Globals& g, const ZeroArgs& a) {
  const StratifiedSpec spec =
      a.half_cube > 0 ? StratifiedSpec::half_cube(a.half_cube, a.d) : StratifiedSpec::full_grid(a.m, a.d);
  const auto rects = random_anchored_boxes(spec.dim(), a.boxes, derive_seed(g.seed, 0x626f786573));
  const ZeroMeanReport rep = mean_disc_is_zero_test(spec, rects, a.reps, g.seed, resolve_threads(g.threads));
  const bool pass = rep.passed == rep.rows.size();
  if (g.json) {
    json j = envelope();
    j["spec"] = spec.describe();
    j["replications"] = rep.replications;
    j["passed"] = rep.passed;
    j["total"] = rep.rows.size();
    json rows = json::array();
    for (const auto& row : rep.rows) {
      rows.push_back({{"corner", row.rect.hi}, {"mean", row.mean}, {"std", row.std}, {"pass", row.pass}});
    }
    j["rows"] = rows;
    j["pass"] = pass;
    emit(j);
  } else {
    std::cout << spec.describe() << "  R " << rep.replications << '\n';
    for (const auto& row : rep.rows) {
      std::cout << (row.pass ? "ok  " : "FAIL") << "  mean " << fmt(row.mean) << "  std " << fmt(row.std) << '\n';
    }
    std::cout << rep.passed << '/' << rep.rows.size() << " boxes pass\n";
  }
  return pass ? kExitPass : kExitPropertyFailure;
}

// ---- maxbin

struct MaxbinArgs {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::optional<double> c;
  bool expect = false;
  bool oracle = false;
};

int run_maxbin(const Globals& g, const MaxbinArgs& a) {
  json j = envelope();
  j["n"] = a.n;
  j["k"] = a.k;
  bool ok = true;
  if (a.c) {
    const MaxBinParams p{a.n, a.k, *a.c};
    json pj;
    pj["c"] = *a.c;
    const auto app = prob_bound_applicable(p);
    pj["applicable"] = app.ok;
    pj["reason"] = app.reason;
    if (app.ok) {
      const double al = alpha(p);
      const double bound = prob_bound(p);
      pj["alpha"] = al;
      pj["bound"] = bound;
      if (a.oracle) {
        const double exact = exact_max_binomial_tail(a.n, a.k, al);
        pj["oracle"] = exact;
        pj["margin"] = exact - bound;
        ok = ok && exact >= bound;
      }
    }
    j["prob"] = pj;
  }
  if (a.expect) {
    json ej;
    const auto app = expect_bound_applicable(a.n, a.k);
    ej["applicable"] = app.ok;
    ej["reason"] = app.reason;
    std::optional<double> bound;
    if (app.ok) {
      bound = expect_bound(a.n, a.k);
      ej["bound"] = *bound;
    }
    if (a.oracle) {
      const double exact = exact_max_binomial_expect(a.n, a.k);
      ej["oracle"] = exact;
      if (bound) {
        ej["margin"] = exact - *bound;
        ok = ok && exact >= *bound;
      }
    }
    j["expect"] = ej;
  }
  if (!a.c && !a.expect && a.oracle) j["oracle_expect"] = exact_max_binomial_expect(a.n, a.k);
  j["pass"] = ok;
  if (g.json) {
    emit(j);
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return ok ? kExitPass : kExitPropertyFailure;
}

// ---- bounds

struct BoundsArgs {
  std::int64_t m = 0;
  std::int64_t d = 0;
  bool alt_constant = false;
};

int run_bounds(const Globals& g, const BoundsArgs& a) {
  std::vector<BoundValue> values;
  const auto k = a.d > 0 ? a.m / a.d : 0;
  if (k > 1) {
    values.push_back(lower_main_bound(a.m, a.d));
  } else {
    BoundValue b;
    b.formula = BoundFormula::LowerMain;
    b.value = 0.0;
    b.reason = "k = floor(m/d) <= 1";
    values.push_back(b);
  }
  values.push_back(smallm_lower_bound(a.m, a.d));
  values.push_back(upper_thm_bound(a.m, a.d, a.alt_constant ? UpperConstant::Alternate : UpperConstant::Default));
  std::int64_t n = 1;
  for (std::int64_t i = 0; i < a.d; ++i) n *= a.m;
  values.push_back(mc_reference(n, a.d));

  if (g.json) {
    json j = envelope();
    j["m"] = a.m;
    j["d"] = a.d;
    json arr = json::array();
    for (const auto& b : values) arr.push_back(bound_json(b));
    j["bounds"] = arr;
    emit(j);
  } else {
    for (const auto& b : values) {
      std::cout << to_string(b.formula) << ' ' << fmt(b.value) << (b.applicable ? "" : "  (not applicable: " + b.reason + ")")
                << '\n';
    }
  }
  return kExitPass;
}

// ---- sweep

struct SweepArgs {
  std::string config;
  std::string out;
  std::string log;
};

int run_sweep_cmd(const Globals& g, const SweepArgs& a) {
  SweepConfig cfg = load_sweep_config(a.config);
  if (g.seed_given) cfg.seed = g.seed;
  if (g.threads > 0) cfg.threads = g.threads;
  if (g.deterministic) cfg.deterministic = true;
  if (!a.out.empty()) cfg.output = a.out;
  if (!a.log.empty()) cfg.replication_log = a.log;
  const SweepResult res = run_sweep(cfg);
  if (cfg.output.empty()) write_sweep_csv(std::cout, res.records, cfg.deterministic);
  if (g.json) {
    json j = envelope();
    j["records"] = res.records.size();
    j["output"] = cfg.output.string();
    emit(j);
  }
  return kExitPass;
}

// ---- collapse

struct CollapseArgs {
  std::string in;
  double threshold = 1.5;
};

int run_collapse(const Globals& g, const CollapseArgs& a) {
  const CollapseReport rep = collapse_analysis(read_sweep_csv(std::filesystem::path(a.in)), a.threshold);
  if (g.json) {
    json j = envelope();
    j["threshold"] = rep.threshold;
    json groups = json::array();
    for (const auto& grp : rep.groups) {
      groups.push_back({{"sampler", to_string(grp.sampler)},
                        {"d", grp.d},
                        {"params", grp.params},
                        {"ratios", grp.ratios},
                        {"min", grp.min_ratio},
                        {"max", grp.max_ratio},
                        {"spread", grp.spread},
                        {"pass", grp.pass}});
    }
    j["groups"] = groups;
    j["pass"] = rep.pass;
    emit(j);
  } else {
    for (const auto& grp : rep.groups) {
      std::cout << to_string(grp.sampler) << " d=" << grp.d << "  min " << fmt(grp.min_ratio) << "  max "
                << fmt(grp.max_ratio) << "  spread " << fmt(grp.spread) << (grp.pass ? "  ok" : "  FAIL") << '\n';
    }
  }
  return rep.pass ? kExitPass : kExitPropertyFailure;
}

// ---- khdemo

struct KhArgs {
  std::string in;
  int grid = KhOptions{}.fallback_cover_grid;
};

int run_khdemo(const Globals& g, const KhArgs& a) {
  const PointSet pts = read_point_set(std::filesystem::path(a.in));
  KhOptions opt;
  opt.fallback_cover_grid = a.grid;
  const KhReport r = kh_demo(pts, opt);
  if (g.json) {
    json j = envelope();
    j["d"] = r.d;
    j["N"] = r.n;
    j["integral"] = r.integral;
    j["estimate"] = r.estimate;
    j["error"] = r.error;
    j["dstar"] = r.dstar;
    j["dstar_normalized"] = r.dstar_normalized;
    j["dstar_kind"] = to_string(r.dstar_kind);
    j["variation"] = r.variation;
    j["bound"] = r.bound;
    j["holds"] = r.holds;
    emit(j);
  } else {
    std::cout << "error " << fmt(r.error) << "  D*/N " << fmt(r.dstar_normalized) << " (" << to_string(r.dstar_kind)
              << ")  V_HK " << fmt(r.variation) << "  bound " << fmt(r.bound) << (r.holds ? "  holds" : "  VIOLATED")
              << '\n';
  }
  return r.holds ? kExitPass : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jittered sampling and star discrepancy toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Root seed");
  app.add_option("--threads", g.threads, "Worker threads (0: JITTERDISC_THREADS or hardware)");
  app.add_flag("--deterministic", g.deterministic, "Suppress timestamps in outputs");
  app.add_flag("--json", g.json, "Machine-readable output");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a point set");
  gen_cmd->add_option("--sampler", gen.sampler, "jittered | halfcube | uniform | lhs");
  gen_cmd->add_option("--m", gen.m, "Strata per axis (jittered)");
  gen_cmd->add_option("--d", gen.d, "Dimension")->required();
  gen_cmd->add_option("--dprime", gen.dprime, "Halved axes (halfcube)");
  gen_cmd->add_option("--n", gen.n, "Number of points (uniform, lhs)");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  DiscArgs disc;
  auto* disc_cmd = app.add_subcommand("disc", "Star discrepancy of a point set");
  disc_cmd->add_option("--in", disc.in, "Point-set file")->required();
  disc_cmd->add_option("--method", disc.method, "exact | heuristic | certified");
  disc_cmd->add_option("--restarts", disc.restarts, "Heuristic restarts");
  disc_cmd->add_option("--grid", disc.grid, "Certified cover grid M");
  disc_cmd->add_option("--delta", disc.delta, "Certified cover gap");
  disc_cmd->add_option("--budget", disc.budget, "Exact work budget");

  WitnessArgs wit;
  auto* wit_cmd = app.add_subcommand("witness", "Lower-bound witness box");
  wit_cmd->add_option("--in", wit.in, "Point-set file")->required();
  wit_cmd->add_option("--scheme", wit.scheme, "construct | discrete | smallm");
  wit_cmd->add_option("--r", wit.r, "Comma-separated r_i (construct)");

  ZeroArgs zero;
  auto* zero_cmd = app.add_subcommand("zerotest", "Zero-mean discrepancy test over random boxes");
  zero_cmd->add_option("--m", zero.m, "Strata per axis");
  zero_cmd->add_option("--d", zero.d, "Dimension")->required();
  zero_cmd->add_option("--half-cube", zero.half_cube, "Use the half-cube partition with this d'");
  zero_cmd->add_option("--reps", zero.reps, "Replications (>= 1000)");
  zero_cmd->add_option("--boxes", zero.boxes, "Number of random anchored boxes");

  MaxbinArgs mb;
  auto* mb_cmd = app.add_subcommand("maxbin", "Maximum of binomials bounds");
  mb_cmd->add_option("--n", mb.n, "Trials")->required();
  mb_cmd->add_option("--k", mb.k, "Number of variables")->required();
  mb_cmd->add_option("--c", mb.c, "Shift parameter of alpha(c)");
  mb_cmd->add_flag("--expect", mb.expect, "Expectation bound");
  mb_cmd->add_flag("--oracle", mb.oracle, "Exact values for comparison");

  BoundsArgs bnd;
  auto* bnd_cmd = app.add_subcommand("bounds", "Closed-form discrepancy bounds");
  bnd_cmd->add_option("--m", bnd.m, "Strata per axis")->required();
  bnd_cmd->add_option("--d", bnd.d, "Dimension")->required();
  bnd_cmd->add_flag("--alt-constant", bnd.alt_constant, "Use 60.9948 in the upper bound");

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Run a replication sweep from a config file");
  sw_cmd->add_option("--config", sw.config, "Config file")->required();
  sw_cmd->add_option("--out", sw.out, "CSV output (overrides config)");
  sw_cmd->add_option("--log", sw.log, "Per-replication log (overrides config)");

  CollapseArgs col;
  auto* col_cmd = app.add_subcommand("collapse", "Scaling-collapse analysis of a sweep CSV");
  col_cmd->add_option("--in", col.in, "Sweep CSV")->required();
  col_cmd->add_option("--threshold", col.threshold, "Maximum allowed max/min ratio");

  KhArgs kh;
  auto* kh_cmd = app.add_subcommand("khdemo", "Koksma-Hlawka check for prod x_i");
  kh_cmd->add_option("--in", kh.in, "Point-set file")->required();
  kh_cmd->add_option("--grid", kh.grid, "Certified cover grid when exact is infeasible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  g.seed_given = seed_opt->count() > 0;

  try {
    if (*gen_cmd) return run_gen(g, gen);
    if (*disc_cmd) return run_disc(g, disc);
    if (*wit_cmd) return run_witness_cmd(g, wit);
    if (*zero_cmd) return run_zerotest(g, zero);
    if (*mb_cmd) return run_maxbin(g, mb);
    if (*bnd_cmd) return run_bounds(g, bnd);
    if (*sw_cmd) return run_sweep_cmd(g, sw);
    if (*col_cmd) return run_collapse(g, col);
    if (*kh_cmd) return run_khdemo(g, kh);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
