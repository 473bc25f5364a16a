#include <doctest.h>

#include <cmath>
#include <vector>

#include "jitterdisc/discrepancy.hpp"
#include "jitterdisc/errors.hpp"
#include "jitterdisc/rng.hpp"
#include "jitterdisc/sampler.hpp"
#include "jitterdisc/stats.hpp"
#include "jitterdisc/witness.hpp"

using namespace jitterdisc;

TEST_CASE("construct d=1 example") {
  const PointSet p(1, {0.1, 0.6});
  const std::vector<double> r{0.5};
  const auto w = witness_construct(p, r);
  CHECK(w.box[0] == 0.6);
  CHECK(w.per_dim_disc[0] == doctest::Approx(0.8));
  CHECK(w.total == doctest::Approx(0.8));
  CHECK(w.closure[0] == Closure::Closed);
  CHECK(w.scheme == WitnessScheme::Construct);
}

TEST_CASE("construct validates r") {
  const auto p = generate_jittered(StratifiedSpec::full_grid(4, 2), 1);
  CHECK_THROWS_AS(witness_construct(p, std::vector<double>{0.3, 0.5}), ValidationError);
  CHECK_THROWS_AS(witness_construct(p, std::vector<double>{0.5}), ValidationError);
  CHECK_THROWS_AS(witness_construct(p, std::vector<double>{1.0, 0.5}), ValidationError);
  CHECK_NOTHROW(witness_construct(p, std::vector<double>{0.0, 0.75}));
  const PointSet unstratified(1, {0.1, 0.2});
  CHECK_THROWS_AS(witness_construct(unstratified, std::vector<double>{0.5}), ValidationError);
}

TEST_CASE("construct per-axis values are non-negative maxima") {
  for (int t = 0; t < 50; ++t) {
    const auto p = generate_jittered(StratifiedSpec::full_grid(6, 3), derive_seed(17, t));
    const std::vector<double> r{grid_value(t % 6, 6), grid_value(3, 6), grid_value(5, 6)};
    const auto w = witness_construct(p, r);
    for (int i = 0; i < 3; ++i) {
      CHECK(w.per_dim_disc[i] >= 0.0);
      const std::vector<Closure> faces{w.closure[i], w.closure[i], w.closure[i]};
      CHECK(signed_disc(p, w.slices[i], faces) == doctest::Approx(w.per_dim_disc[i]).epsilon(1e-12));
      // no other candidate in the slab does better
      for (std::size_t q = 0; q < p.size(); ++q) {
        const double s = p.coord(q, i);
        if (s < r[i]) continue;
        std::vector<double> lo(3, 0.0);
        std::vector<double> hi = r;
        lo[i] = r[i];
        hi[i] = s;
        std::vector<Closure> mixed(3, Closure::Strict);
        mixed[i] = Closure::Closed;
        CHECK(signed_disc(p, AxisRect(lo, hi), mixed) <= w.per_dim_disc[i] + 1e-9);
      }
    }
    CHECK(w.box_disc == signed_disc(p, w.box_rect(), w.closure));
  }
}

TEST_CASE("discrete per-axis value matches the best U_j") {
  const int m = 8;
  const int d = 2;
  const int k = m / d;
  const double r = grid_value(m - k, m);
  for (int t = 0; t < 50; ++t) {
    const auto p = generate_jittered(StratifiedSpec::full_grid(m, d), derive_seed(23, t));
    const auto w = witness_discrete(p);
    CHECK(w.r[0] == r);
    for (int i = 0; i < d; ++i) {
      double best = 0.0;
      for (int j = 0; j < k; ++j) {
        const double z = r + static_cast<double>(j) / m + 1.0 / (2.0 * m);
        std::vector<double> lo(d, 0.0);
        std::vector<double> hi(d, r);
        lo[i] = r;
        hi[i] = z;
        best = std::max(best, signed_disc(p, AxisRect(lo, hi)));
      }
      CHECK(w.per_dim_disc[i] == doctest::Approx(best).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(witness_discrete(generate_jittered(StratifiedSpec::full_grid(2, 3), 1)), ValidationError);
}

TEST_CASE("half slabs are disjoint and cube aligned") {
  const int m = 12;
  const int d = 3;
  const int k = m / d;
  const double r = grid_value(m - k, m);
  for (int j = 0; j + 1 < k; ++j) {
    const double zj = r + (2.0 * j + 1.0) / (2.0 * m);
    const double yj1 = r + (j + 1.0) / m;
    CHECK(zj < yj1);
  }
  const auto p = generate_jittered(StratifiedSpec::full_grid(m, d), 3);
  for (int axis = 0; axis < d; ++axis) {
    const auto counts = half_slab_counts(p, axis);
    CHECK(counts.size() == static_cast<std::size_t>(k));
    // every cube of the slab meets exactly one T_j, so counts are at most N'
    for (auto c : counts) CHECK(c <= static_cast<std::size_t>((m - k) * (m - k)));
  }
}

TEST_CASE("smallm m=2 d=2 uses the thin slab") {
  const auto p = generate_jittered(StratifiedSpec::full_grid(2, 2), 8);
  const auto w = witness_smallm(p);
  CHECK(w.r[0] == 0.5);
  for (int i = 0; i < 2; ++i) {
    CHECK(w.per_dim_disc[i] >= 0.0);
    if (w.per_dim_disc[i] > 0.0) {
      CHECK(w.box[i] == 0.75);
      CHECK(w.closure[i] == Closure::Closed);
      CHECK(w.per_dim_disc[i] == 0.5);
    }
  }
}

TEST_CASE("smallm half-cell branch") {
  // N' = 4^2 = 16 for m=5, d=3
  const auto p = generate_jittered(StratifiedSpec::full_grid(5, 3), 8);
  const auto w = witness_smallm(p);
  for (int i = 0; i < 3; ++i) {
    CHECK(w.per_dim_disc[i] >= 0.0);
    if (w.per_dim_disc[i] > 0.0) {
      CHECK(w.box[i] == 0.9);
      CHECK(w.closure[i] == Closure::Strict);
    }
  }
}

TEST_CASE("thin slab occupancy") {
  // m=3, d=2: N' = 2, thin slab [2/3, 2/3 + 1/12] x [0, 2/3)
  const int m = 3;
  const std::size_t reps = 10000;
  const double n_prime = 2.0;
  const double exact = 1.0 - std::pow(1.0 - 1.0 / (2.0 * n_prime), n_prime);
  CHECK(exact >= 1.0 - std::exp(-0.5));
  std::size_t hits = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto w = witness_smallm(generate_jittered(StratifiedSpec::full_grid(m, 2), derive_seed(55, r)));
    if (w.per_dim_disc[0] > 0.0) ++hits;
  }
  const double rate = static_cast<double>(hits) / reps;
  const double sigma = std::sqrt(exact * (1 - exact) / reps);
  CHECK(std::abs(rate - exact) <= 4 * sigma);
  CHECK(rate >= 0.3935 - 4 * sigma);
}

TEST_CASE("witness boxes are feasible anchored boxes") {
  // |disc(B)| <= D* holds for every realisation. total <= D* only holds in
  // expectation: disc(B) = total + disc(leftover) and the leftover term can
  // be negative, so the per-realisation comparison is on box_disc.
  for (int m : {2, 3, 4}) {
    const double half = grid_value(m / 2, m);
    std::vector<double> totals[3];
    std::vector<double> exacts;
    for (int t = 0; t < 400; ++t) {
      const auto p = generate_jittered(StratifiedSpec::full_grid(m, 2), derive_seed(1000 * m, t));
      const double exact = star_disc_exact(p).value;
      exacts.push_back(exact);
      const WitnessResult ws[3] = {witness_smallm(p), witness_construct(p, std::vector<double>{half, half}),
                                   witness_discrete(p)};
      for (int s = 0; s < 3; ++s) {
        CHECK(std::abs(ws[s].box_disc) <= exact + 1e-9);
        CHECK(ws[s].box_disc == signed_disc(p, ws[s].box_rect(), ws[s].closure));
        totals[s].push_back(ws[s].total);
      }
    }
    const auto ex = summarize(exacts);
    for (const auto& tot : totals) CHECK(summarize(tot).mean <= ex.mean + 1e-9);
  }
}

TEST_CASE("random anchored boxes") {
  const auto a = random_anchored_boxes(3, 5, 9);
  const auto b = random_anchored_boxes(3, 5, 9);
  REQUIRE(a.size() == 5);
  for (std::size_t q = 0; q < a.size(); ++q) {
    CHECK(a[q].hi == b[q].hi);
    CHECK(a[q].lo == std::vector<double>(3, 0.0));
  }
}

TEST_CASE("zero-mean test") {
  const auto spec = StratifiedSpec::full_grid(4, 2);
  const std::vector<AxisRect> rects{AxisRect::anchored({0.5, 0.75}), AxisRect({0.25, 0.0}, {0.5, 1.0})};
  const auto rep = mean_disc_is_zero_test(spec, rects, 1000, 5);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].mean == 0.0);
  CHECK(rep.rows[0].std == 0.0);
  CHECK(rep.rows[0].pass);
  CHECK(rep.passed == 2);

  const auto boxes = random_anchored_boxes(2, 10, 77);
  const auto rnd = mean_disc_is_zero_test(spec, boxes, 2000, 6, 2);
  CHECK(rnd.passed >= 9);
  const auto again = mean_disc_is_zero_test(spec, boxes, 2000, 6, 1);
  for (std::size_t q = 0; q < boxes.size(); ++q) CHECK(rnd.rows[q].mean == again.rows[q].mean);

  CHECK_THROWS_AS(mean_disc_is_zero_test(spec, rects, 999, 1), ValidationError);
  const std::vector<AxisRect> wrong{AxisRect::anchored({0.5})};
  CHECK_THROWS_AS(mean_disc_is_zero_test(spec, wrong, 1000, 1), ValidationError);
}

TEST_CASE("scheme names") {
  for (auto s : {WitnessScheme::Construct, WitnessScheme::DiscreteLowerMain, WitnessScheme::SmallM}) {
    CHECK(witness_scheme_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(witness_scheme_from_string("nope"), ValidationError);
}
