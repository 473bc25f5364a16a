#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jitterdisc {

/// k independent Bin(n, 1/2) variables and the shift parameter c of
/// alpha(c) = sqrt( n (ln k - 1/2 ln ln k - c) / (2 (1 + sqrt(2 ln k / n))) ).
struct MaxBinParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double c = 0.0;
};

struct Applicability {
  bool ok = false;
  std::string reason;
};

/// Throws DomainError for k < 2 or a negative radicand.
double alpha(const MaxBinParams& params);

/// alpha(c) >= sqrt(n) and alpha(c) + n/alpha(c) <= n/2.
Applicability prob_bound_applicable(const MaxBinParams& params);

/// Lower bound 1 - exp(-e^c / (1.5 e^{169/6} sqrt(pi))) on
/// Pr[X_max >= n/2 + alpha(c)]. Throws DomainError naming the failed
/// condition when not applicable.
double prob_bound(const MaxBinParams& params);

/// e^6 <= k <= e^{n/2}.
Applicability expect_bound_applicable(std::int64_t n, std::int64_t k);

/// Lower bound on E[max(0, X_max - n/2)]; throws DomainError outside
/// e^6 <= k <= e^{n/2}.
double expect_bound(std::int64_t n, std::int64_t k);

/// (1 / (e^{1/6} sqrt(2 pi))) n^{-1/2} exp(-2 a^2/n - 4 a^3/n^2), a lower
/// bound on Pr[X = n/2 + a]. Needs n even, 0 <= a <= n/2, n/2 + a integral.
double pointwise_pmf_bound(std::int64_t n, double a);

struct EqBinoValue {
  /// floor(n/a) n^{-1/2} exp(-2 (a+n/a)^2/n - 4 (a+n/a)^3/n^2) / (e^{1/6} sqrt(2 pi)).
  double unsimplified = 0.0;
  /// (sqrt(n)/a) exp(-2 a^2/n - 4 a^3/n^2) / (1.5 e^{169/6} sqrt(2 pi)).
  double final_form = 0.0;
};

/// Tail lower bound chain for Pr[X >= n/2 + a]; needs sqrt(n) <= a and
/// a + n/a <= n/2.
EqBinoValue tail_bound_eq_bino(std::int64_t n, double a);

/// Bin(n, 1/2) distribution in extended precision: pmf and upper tails
/// computed by forward recurrence from 2^{-n} with compensated summation.
class BinomialHalf {
 public:
  /// 0 <= n <= 10^4.
  explicit BinomialHalf(std::int64_t n);

  std::int64_t n() const noexcept { return n_; }
  long double pmf(std::int64_t x) const noexcept;
  /// Pr[X >= x].
  long double upper_tail(std::int64_t x) const noexcept;
  /// Pr[X <= x].
  long double cdf(std::int64_t x) const noexcept { return 1.0L - upper_tail(x + 1); }

 private:
  std::int64_t n_;
  std::vector<long double> pmf_;
  std::vector<long double> upper_;
};

/// Pr[max of k iid Bin(n,1/2) >= x] = 1 - (1 - Pr[X >= x])^k, evaluated
/// as -expm1(k log1p(-tail)).
long double prob_max_at_least(const BinomialHalf& dist, std::int64_t k, std::int64_t x);

/// Exact E[max(0, X_max - n/2)] for k iid Bin(n, 1/2): the sum over the
/// integer thresholds x > n/2 of (gap to the previous threshold) times
/// Pr[X_max >= x], the first gap being floor(n/2) + 1 - n/2.
/// n <= 10^4, 1 <= k <= 10^9.
double exact_max_binomial_expect(std::int64_t n, std::int64_t k);

/// Exact Pr[X_max >= n/2 + a] for real a (threshold rounded up).
double exact_max_binomial_tail(std::int64_t n, std::int64_t k, double a);

}  // namespace jitterdisc
