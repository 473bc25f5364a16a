#pragma once

// Slow, independent reference implementations used only by the tests.

#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/log1p.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "jitterdisc/point_set.hpp"

namespace oracle {

namespace mp = boost::multiprecision;
using hp = mp::cpp_bin_float_50;

/// Star discrepancy by visiting every corner of the full candidate grid
/// (coordinates of P plus 1.0 on every axis) and counting by scan.
inline double brute_star_disc(const jitterdisc::PointSet& p) {
  const int d = p.dim();
  const std::size_t n = p.size();
  std::vector<std::vector<double>> cand(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < n; ++i) cand[a].push_back(p.coord(i, a));
    cand[a].push_back(1.0);
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> y(static_cast<std::size_t>(d));
  double best = 0.0;
  while (true) {
    double vol = 1.0;
    for (int a = 0; a < d; ++a) {
      y[a] = cand[a][idx[a]];
      vol *= y[a];
    }
    std::size_t closed = 0;
    std::size_t strict = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool in_closed = true;
      bool in_strict = true;
      for (int a = 0; a < d; ++a) {
        const double c = p.coord(i, a);
        if (c > y[a]) in_closed = false;
        if (c >= y[a]) in_strict = false;
      }
      closed += in_closed;
      strict += in_strict;
    }
    const double nv = static_cast<double>(n) * vol;
    best = std::max({best, static_cast<double>(closed) - nv, nv - static_cast<double>(strict)});
    int a = 0;
    while (a < d && ++idx[a] == cand[a].size()) idx[a++] = 0;
    if (a == d) break;
  }
  return best;
}

/// Bin(n, 1/2) pmf as exact rationals.
inline std::vector<mp::cpp_rational> rational_pmf(int n) {
  std::vector<mp::cpp_rational> out;
  mp::cpp_int binom = 1;
  const mp::cpp_int denom = mp::cpp_int(1) << n;
  for (int x = 0; x <= n; ++x) {
    out.emplace_back(binom, denom);
    binom = binom * (n - x) / (x + 1);
  }
  return out;
}

/// Bin(n, 1/2) pmf in 50-digit floating point.
inline std::vector<hp> hp_pmf(std::int64_t n) {
  std::vector<hp> out(static_cast<std::size_t>(n + 1));
  out[0] = mp::pow(hp(0.5), static_cast<int>(n));
  for (std::int64_t x = 0; x < n; ++x) out[x + 1] = out[x] * hp(n - x) / hp(x + 1);
  return out;
}

/// Pr[X <= x] for every x.
inline std::vector<hp> hp_cdf(std::int64_t n) {
  const auto pmf = hp_pmf(n);
  std::vector<hp> cdf(pmf.size());
  hp acc = 0;
  for (std::size_t x = 0; x < pmf.size(); ++x) cdf[x] = acc += pmf[x];
  return cdf;
}

inline hp hp_pow_cdf(const std::vector<hp>& cdf, std::int64_t x, std::int64_t k) {
  if (x < 0) return 0;
  if (x >= static_cast<std::int64_t>(cdf.size()) - 1) return 1;
  return mp::pow(cdf[static_cast<std::size_t>(x)], hp(k));
}

/// Pr[max of k iid Bin(n,1/2) >= x].
inline double hp_max_tail(std::int64_t n, std::int64_t k, std::int64_t x) {
  const auto cdf = hp_cdf(n);
  return static_cast<double>(1 - hp_pow_cdf(cdf, x - 1, k));
}

/// E[max(0, X_max - n/2)] through the law of X_max:
/// sum_x (F(x)^k - F(x-1)^k) max(0, x - n/2).
inline double hp_max_expect(std::int64_t n, std::int64_t k) {
  const auto cdf = hp_cdf(n);
  hp sum = 0;
  const hp half = hp(n) / 2;
  for (std::int64_t x = 0; x <= n; ++x) {
    if (hp(x) <= half) continue;
    sum += (hp_pow_cdf(cdf, x, k) - hp_pow_cdf(cdf, x - 1, k)) * (hp(x) - half);
  }
  return static_cast<double>(sum);
}

inline hp pi() { return boost::math::constants::pi<hp>(); }
inline hp e() { return boost::math::constants::e<hp>(); }
inline hp big_const() { return hp(1.5) * mp::exp(hp(169) / 6); }

inline hp alpha(std::int64_t n, std::int64_t k, hp c) {
  const hp lk = mp::log(hp(k));
  return mp::sqrt(hp(n) * (lk - mp::log(lk) / 2 - c) / (2 * (1 + mp::sqrt(2 * lk / n))));
}

inline hp prob_bound(hp c) { return 1 - mp::exp(-mp::exp(c) / (big_const() * mp::sqrt(pi()))); }

inline hp expect_bound(std::int64_t n, std::int64_t k) {
  const hp lk = mp::log(hp(k));
  return mp::sqrt(hp(n) * (lk - mp::log(lk)) / (2 * (1 + mp::sqrt(2 * lk / n)))) *
         (1 - mp::exp(-mp::sqrt(lk) / (big_const() * mp::sqrt(pi()))));
}

inline hp pointwise(std::int64_t n, hp a) {
  const hp nn = n;
  return mp::exp(-2 * a * a / nn - 4 * a * a * a / (nn * nn)) / (mp::exp(hp(1) / 6) * mp::sqrt(2 * pi()) * mp::sqrt(nn));
}

inline hp bino_unsimplified(std::int64_t n, hp a) {
  const hp nn = n;
  const hp b = a + nn / a;
  return mp::floor(nn / a) / mp::sqrt(nn) * mp::exp(-2 * b * b / nn - 4 * b * b * b / (nn * nn)) /
         (mp::exp(hp(1) / 6) * mp::sqrt(2 * pi()));
}

inline hp bino_final(std::int64_t n, hp a) {
  const hp nn = n;
  return mp::sqrt(nn) / a * mp::exp(-2 * a * a / nn - 4 * a * a * a / (nn * nn)) / (big_const() * mp::sqrt(2 * pi()));
}

inline hp lower_main(std::int64_t m, std::int64_t d) {
  const std::int64_t k = m / d;
  const hp lk = mp::log(hp(k));
  const hp dd = d;
  return mp::pow(2 * e(), hp(-0.5)) * dd * mp::pow(hp(m), (dd - 1) / 2) * mp::sqrt(lk - mp::log(lk)) *
         mp::pow(1 + mp::sqrt(2 * lk / mp::pow(hp(m - k), d - 1)), hp(-0.5)) *
         (1 - mp::exp(-mp::sqrt(lk) / (big_const() * mp::sqrt(pi()))));
}

inline hp smallm(std::int64_t m, std::int64_t d) {
  const hp x = mp::pow(hp(m - 1), (hp(d) - 1) / 2);
  return 4 / (5 * mp::exp(8 + hp(1) / 6) * mp::sqrt(2 * pi())) * mp::exp(-32 / x) * d * x;
}

inline hp upper_thm(std::int64_t m, std::int64_t d, hp constant) {
  const hp md = hp(m) / d;
  return constant * mp::sqrt(d * mp::pow(hp(m), d)) * (mp::sqrt(mp::log(4 * e() * md)) + hp("2.9599")) / mp::sqrt(md);
}

/// Relative agreement; subnormal results only carry absolute accuracy.
inline bool close_rel(double got, const hp& want, double rel) {
  const double w = static_cast<double>(want);
  return std::abs(got - w) <= rel * std::abs(w) + std::numeric_limits<double>::min();
}

}  // namespace oracle
