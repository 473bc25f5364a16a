#include "jitterdisc/binom.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jitterdisc/errors.hpp"

namespace jitterdisc {

namespace {

// ln(1.5 e^{169/6} sqrt(pi)) and ln(1.5 e^{169/6} sqrt(2 pi)); e^{169/6} ~ 1.7e12
// is only ever handled through its logarithm.
const double kLogTailConstPi = std::log(1.5) + 169.0 / 6.0 + 0.5 * std::log(std::numbers::pi);
const double kLogTailConst2Pi = std::log(1.5) + 169.0 / 6.0 + 0.5 * std::log(2.0 * std::numbers::pi);
const double kLogPmfConst = 1.0 / 6.0 + 0.5 * std::log(2.0 * std::numbers::pi);

void require_n(std::int64_t n) {
  if (n < 1) throw ValidationError("n must be >= 1, got " + std::to_string(n));
}

}  // namespace

double alpha(const MaxBinParams& p) {
  require_n(p.n);
  if (p.k < 2) throw DomainError("alpha needs k >= 2 (ln ln k undefined for k = 1)");
  const double n = static_cast<double>(p.n);
  const double lk = std::log(static_cast<double>(p.k));
  const double numer = n * (lk - 0.5 * std::log(lk) - p.c);
  const double denom = 2.0 * (1.0 + std::sqrt(2.0 * lk / n));
  const double radicand = numer / denom;
  if (radicand < 0.0) throw DomainError("alpha radicand is negative (c > ln k - 1/2 ln ln k)");
  return std::sqrt(radicand);
}

Applicability prob_bound_applicable(const MaxBinParams& p) {
  double a = 0.0;
  try {
    a = alpha(p);
  } catch (const DomainError& e) {
    return {false, e.what()};
  }
  const double n = static_cast<double>(p.n);
  if (a < std::sqrt(n)) return {false, "alpha(c) < sqrt(n)"};
  if (a + n / a > n / 2.0) return {false, "alpha(c) + n/alpha(c) > n/2"};
  return {true, ""};
}

double prob_bound(const MaxBinParams& p) {
  const auto app = prob_bound_applicable(p);
  if (!app.ok) throw DomainError("prob_bound not applicable: " + app.reason);
  return -std::expm1(-std::exp(p.c - kLogTailConstPi));
}

Applicability expect_bound_applicable(std::int64_t n, std::int64_t k) {
  if (n < 1) return {false, "n < 1"};
  if (k < 2) return {false, "k < e^6"};
  const double lk = std::log(static_cast<double>(k));
  if (lk < 6.0) return {false, "k < e^6"};
  if (lk > static_cast<double>(n) / 2.0) return {false, "k > e^{n/2}"};
  return {true, ""};
}

double expect_bound(std::int64_t n, std::int64_t k) {
  const auto app = expect_bound_applicable(n, k);
  if (!app.ok) throw DomainError("expect_bound out of range: " + app.reason);
  const double nd = static_cast<double>(n);
  const double lk = std::log(static_cast<double>(k));
  const double lead = std::sqrt(nd * (lk - std::log(lk)) / (2.0 * (1.0 + std::sqrt(2.0 * lk / nd))));
  return lead * -std::expm1(-std::sqrt(lk) * std::exp(-kLogTailConstPi));
}

double pointwise_pmf_bound(std::int64_t n, double a) {
  require_n(n);
  if (n % 2 != 0) throw ValidationError("pointwise pmf bound needs even n");
  const double nd = static_cast<double>(n);
  if (!(a >= 0.0 && a <= nd / 2.0)) throw ValidationError("pointwise pmf bound needs 0 <= alpha <= n/2");
  const double x = nd / 2.0 + a;
  if (x != std::floor(x)) throw ValidationError("n/2 + alpha must be integral");
  return std::exp(-kLogPmfConst - 0.5 * std::log(nd) - 2.0 * a * a / nd - 4.0 * a * a * a / (nd * nd));
}

EqBinoValue tail_bound_eq_bino(std::int64_t n, double a) {
  require_n(n);
  const double nd = static_cast<double>(n);
  if (!(a >= std::sqrt(nd))) throw DomainError("tail bound needs alpha >= sqrt(n)");
  const double wide = a + nd / a;
  if (wide > nd / 2.0) throw DomainError("tail bound needs alpha + n/alpha <= n/2");
  EqBinoValue v;
  v.unsimplified = std::floor(nd / a) *
                   std::exp(-kLogPmfConst - 0.5 * std::log(nd) - 2.0 * wide * wide / nd -
                            4.0 * wide * wide * wide / (nd * nd));
  v.final_form = std::exp(-kLogTailConst2Pi + 0.5 * std::log(nd) - std::log(a) - 2.0 * a * a / nd -
                          4.0 * a * a * a / (nd * nd));
  return v;
}

BinomialHalf::BinomialHalf(std::int64_t n) : n_(n) {
  if (n < 0 || n > 10000) throw ValidationError("BinomialHalf supports 0 <= n <= 10000");
  const auto size = static_cast<std::size_t>(n) + 1;
  pmf_.resize(size);
  pmf_[0] = std::ldexp(1.0L, static_cast<int>(-n));
  for (std::int64_t x = 0; x < n; ++x) {
    pmf_[static_cast<std::size_t>(x) + 1] =
        pmf_[static_cast<std::size_t>(x)] * static_cast<long double>(n - x) / static_cast<long double>(x + 1);
  }
  upper_.assign(size + 1, 0.0L);
  long double sum = 0.0L;
  long double comp = 0.0L;
  for (std::int64_t x = n; x >= 0; --x) {
    const long double v = pmf_[static_cast<std::size_t>(x)];
    const long double t = sum + v;
    comp += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
    upper_[static_cast<std::size_t>(x)] = sum + comp;
  }
}

long double BinomialHalf::pmf(std::int64_t x) const noexcept {
  if (x < 0 || x > n_) return 0.0L;
  return pmf_[static_cast<std::size_t>(x)];
}

long double BinomialHalf::upper_tail(std::int64_t x) const noexcept {
  if (x <= 0) return 1.0L;
  if (x > n_) return 0.0L;
  return upper_[static_cast<std::size_t>(x)];
}

long double prob_max_at_least(const BinomialHalf& dist, std::int64_t k, std::int64_t x) {
  const long double tail = dist.upper_tail(x);
  if (tail >= 1.0L) return 1.0L;
  if (tail <= 0.0L) return 0.0L;
  return -std::expm1(static_cast<long double>(k) * std::log1p(-tail));
}

namespace {

void check_oracle_range(std::int64_t n, std::int64_t k) {
  if (n < 1 || n > 10000) throw ValidationError("exact oracle supports 1 <= n <= 10^4");
  if (k < 1 || k > 1000000000) throw ValidationError("exact oracle supports 1 <= k <= 10^9");
}

}  // namespace

double exact_max_binomial_expect(std::int64_t n, std::int64_t k) {
  check_oracle_range(n, k);
  const BinomialHalf dist(n);
  const long double half = static_cast<long double>(n) / 2.0L;
  long double sum = 0.0L;
  long double comp = 0.0L;
  for (std::int64_t x = n / 2 + 1; x <= n; ++x) {
    const long double gap = x == n / 2 + 1 ? static_cast<long double>(x) - half : 1.0L;
    const long double term = gap * prob_max_at_least(dist, k, x);
    const long double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return static_cast<double>(sum + comp);
}

double exact_max_binomial_tail(std::int64_t n, std::int64_t k, double a) {
  check_oracle_range(n, k);
  const double target = static_cast<double>(n) / 2.0 + a;
  double x = std::ceil(target);
  if (std::fabs(target - std::round(target)) < 1e-9) x = std::round(target);
  return static_cast<double>(prob_max_at_least(BinomialHalf(n), k, static_cast<std::int64_t>(x)));
}

}  // namespace jitterdisc
