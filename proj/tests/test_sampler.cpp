#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>
#include <vector>

#include "jitterdisc/errors.hpp"
#include "jitterdisc/rng.hpp"
#include "jitterdisc/sampler.hpp"
#include "jitterdisc/stats.hpp"

using namespace jitterdisc;

namespace {

bool same_bytes(const PointSet& a, const PointSet& b) {
  return a.size() == b.size() && a.dim() == b.dim() &&
         std::memcmp(a.coords().data(), b.coords().data(), a.coords().size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(StratifiedSpec::full_grid(1, 2), ValidationError);
  CHECK_THROWS_AS(StratifiedSpec::full_grid(2, 0), ValidationError);
  CHECK_THROWS_AS(StratifiedSpec::half_cube(3, 2), ValidationError);
  CHECK_THROWS_AS(StratifiedSpec::half_cube(0, 2), ValidationError);
  CHECK(StratifiedSpec::full_grid(3, 5).cell_count() == 243);
  CHECK(StratifiedSpec::half_cube(4, 8).cell_count() == 16);
  CHECK_THROWS_AS((void)StratifiedSpec::full_grid(1000, 10).cell_count(), CapacityError);
}

TEST_CASE("jittered m=2 d=2 has one point per quadrant") {
  const auto p = generate_jittered(StratifiedSpec::full_grid(2, 2), 7);
  REQUIRE(p.size() == 4);
  std::set<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < 4; ++i) cells.insert({p.coord(i, 0) < 0.5, p.coord(i, 1) < 0.5});
  CHECK(cells.size() == 4);
}

TEST_CASE("jittered m=3 d=5 has 243 points") {
  CHECK(generate_jittered(StratifiedSpec::full_grid(3, 5), 1).size() == 243);
}

TEST_CASE("jittered stratification is a bijection onto the cells") {
  for (int m : {2, 3, 5, 7, 10}) {
    for (int d : {1, 2, 3}) {
      const auto p = generate_jittered(StratifiedSpec::full_grid(m, d), 100 + m * 10 + d);
      std::set<std::vector<int>> cells;
      for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<int> cell;
        for (int a = 0; a < d; ++a) {
          const double c = p.coord(i, a);
          CHECK(static_cast<int>(std::floor(m * c)) == stratum_of(c, m));
          cell.push_back(stratum_of(c, m));
        }
        cells.insert(cell);
      }
      CHECK(cells.size() == p.size());
      CHECK(stratified_resolution(p) == m);
    }
  }
}

TEST_CASE("generators are deterministic per seed") {
  const auto spec = StratifiedSpec::full_grid(4, 3);
  CHECK(same_bytes(generate_jittered(spec, 42), generate_jittered(spec, 42)));
  CHECK_FALSE(same_bytes(generate_jittered(spec, 42), generate_jittered(spec, 43)));
  CHECK(same_bytes(generate_uniform(50, 3, 9), generate_uniform(50, 3, 9)));
  CHECK(same_bytes(generate_lhs(50, 3, 9), generate_lhs(50, 3, 9)));
  CHECK(same_bytes(generate_half_cube(StratifiedSpec::half_cube(3, 5), 9),
                   generate_half_cube(StratifiedSpec::half_cube(3, 5), 9)));
}

TEST_CASE("half-cube boxes") {
  SUBCASE("d'=1 d=3") {
    const auto p = generate_half_cube(StratifiedSpec::half_cube(1, 3), 5);
    REQUIRE(p.size() == 2);
    CHECK(p.coord(0, 0) < 0.5);
    CHECK(p.coord(1, 0) >= 0.5);
  }
  SUBCASE("d'=4 d=8") {
    const auto p = generate_half_cube(StratifiedSpec::half_cube(4, 8), 5);
    CHECK(p.size() == 16);
    CHECK(p.dim() == 8);
    std::set<std::vector<int>> boxes;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<int> b;
      for (int a = 0; a < 4; ++a) b.push_back(p.coord(i, a) >= 0.5);
      boxes.insert(b);
    }
    CHECK(boxes.size() == 16);
  }
  SUBCASE("d'=d=2 coincides with the 2-grid") {
    const auto h = generate_half_cube(StratifiedSpec::half_cube(2, 2), 11);
    const auto j = generate_jittered(StratifiedSpec::full_grid(2, 2), 11);
    CHECK(same_bytes(h, j));
  }
}

TEST_CASE("place_in_stratum keeps half-open membership") {
  const double top = std::nextafter(1.0, 0.0);
  for (std::int64_t m : {3, 7, 10, 49, 1000}) {
    for (std::int64_t j : {std::int64_t{0}, m / 2, m - 1}) {
      for (double off : {0.0, 0.5, top}) {
        const double c = place_in_stratum(j, m, off);
        CHECK(c >= grid_value(j, m));
        CHECK(c < grid_value(j + 1, m));
        CHECK(static_cast<std::int64_t>(std::floor(static_cast<double>(m) * c)) == j);
      }
    }
  }
}

TEST_CASE("uniform and lhs") {
  CHECK_THROWS_AS(generate_uniform(0, 2, 1), ValidationError);
  CHECK_THROWS_AS(generate_lhs(0, 2, 1), ValidationError);
  const auto one = generate_uniform(1, 1, 3);
  CHECK(one.size() == 1);
  CHECK(one.coord(0, 0) >= 0.0);
  CHECK(one.coord(0, 0) < 1.0);
  CHECK(generate_uniform(243, 5, 3).size() == 243);

  for (std::size_t n : {1u, 4u, 17u, 100u}) {
    const auto p = generate_lhs(n, 3, 77);
    for (int a = 0; a < 3; ++a) {
      std::vector<double> col;
      for (std::size_t i = 0; i < n; ++i) col.push_back(p.coord(i, a));
      std::sort(col.begin(), col.end());
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(col[i] >= grid_value(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n)));
        CHECK(col[i] < grid_value(static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(n)));
      }
    }
  }
}

TEST_CASE("uniform coordinate mean is 1/2") {
  const std::size_t n = 100000;
  const int d = 2;
  const auto p = generate_uniform(n, d, 2024);
  const auto s = summarize(p.coords());
  const double sigma = (1.0 / std::sqrt(12.0)) / std::sqrt(static_cast<double>(n * d));
  CHECK(std::abs(s.mean - 0.5) <= 4.0 * sigma);
}

TEST_CASE("point in a fixed cell is uniform in it") {
  const int m = 4;
  const std::size_t reps = 10000;
  const std::size_t cell = 6;
  const auto spec = StratifiedSpec::full_grid(m, 2);
  std::vector<double> x0;
  std::vector<double> x1;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto p = generate_jittered(spec, derive_seed(99, r));
    x0.push_back(p.coord(cell, 0));
    x1.push_back(p.coord(cell, 1));
  }
  const double tol = 4.0 * (1.0 / (m * std::sqrt(12.0))) / std::sqrt(static_cast<double>(reps));
  // cell 6 = (2, 1) with axis 0 fastest
  CHECK(std::abs(summarize(x0).mean - 2.5 / m) <= tol);
  CHECK(std::abs(summarize(x1).mean - 1.5 / m) <= tol);
}

TEST_CASE("point cap") {
  SamplerLimits small{100};
  CHECK_THROWS_AS(generate_jittered(StratifiedSpec::full_grid(11, 2), 1, small), CapacityError);
  CHECK_THROWS_AS(generate_uniform(101, 2, 1, small), CapacityError);
}

TEST_CASE("stratified_resolution rejects sets that are not stratified") {
  const PointSet p(1, {0.1, 0.2});
  CHECK_THROWS_AS(stratified_resolution(p), ValidationError);
  const PointSet q(1, {0.1, 0.7});
  CHECK(stratified_resolution(q) == 2);
}

TEST_CASE("PointSet validation") {
  CHECK_THROWS_AS(PointSet(2, {}), ValidationError);
  CHECK_THROWS_AS(PointSet(2, {0.1, 0.2, 0.3}), ValidationError);
  CHECK_THROWS_AS(PointSet(1, {1.0}), ValidationError);
  CHECK_THROWS_AS(PointSet(1, {-0.0001}), ValidationError);
}
