#include "jitterdisc/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jitterdisc/errors.hpp"

namespace jitterdisc {

std::string to_string(BoundFormula formula) {
  switch (formula) {
    case BoundFormula::LowerMain: return "lower_main";
    case BoundFormula::SmallMLower: return "smallm_lower";
    case BoundFormula::UpperThm: return "upper_thm";
    case BoundFormula::MCReference: return "mc_reference";
  }
  return "lower_main";
}

double upper_constant_value(UpperConstant which) noexcept {
  return which == UpperConstant::Default ? 60.9984 : 60.9948;
}

BoundValue lower_main_bound(std::int64_t m, std::int64_t d) {
  if (m < 1 || d < 1) throw ValidationError("lower_main_bound needs m, d >= 1");
  const std::int64_t k = m / d;
  if (k <= 1) throw DomainError("lower_main_bound undefined for floor(m/d) <= 1 (ln ln k)");
  const double md = static_cast<double>(m);
  const double dd = static_cast<double>(d);
  const double lk = std::log(static_cast<double>(k));
  const double log_rest = (dd - 1.0) * std::log(static_cast<double>(m - k));

  BoundValue b;
  b.formula = BoundFormula::LowerMain;
  const double lead = std::exp(-0.5 * std::log(2.0 * std::numbers::e) + std::log(dd) + 0.5 * (dd - 1.0) * std::log(md));
  const double f1 = std::sqrt(lk - std::log(lk));
  const double f2 = 1.0 / std::sqrt(1.0 + std::sqrt(2.0 * lk * std::exp(-log_rest)));
  const double log_c = std::log(1.5) + 169.0 / 6.0 + 0.5 * std::log(std::numbers::pi);
  const double f3 = -std::expm1(-std::sqrt(lk) * std::exp(-log_c));
  b.value = lead * f1 * f2 * f3;
  if (m < 2 || d < 2) {
    b.reason = "needs m, d >= 2";
  } else if (lk < 6.0) {
    b.reason = "floor(m/d) < e^6";
  } else {
    b.applicable = true;
  }
  return b;
}

BoundValue smallm_lower_bound(std::int64_t m, std::int64_t d) {
  if (m < 2 || d < 2) throw ValidationError("smallm_lower_bound needs m, d >= 2");
  const double half_pow = std::exp(0.5 * static_cast<double>(d - 1) * std::log(static_cast<double>(m - 1)));
  const double constant = 4.0 / (5.0 * std::exp(8.0 + 1.0 / 6.0) * std::sqrt(2.0 * std::numbers::pi));
  BoundValue b;
  b.formula = BoundFormula::SmallMLower;
  b.value = constant * std::exp(-32.0 / half_pow) * static_cast<double>(d) * half_pow;
  b.applicable = true;
  return b;
}

BoundValue upper_thm_bound(std::int64_t m, std::int64_t d, UpperConstant constant) {
  if (m < 1 || d < 1) throw ValidationError("upper_thm_bound needs m, d >= 1");
  const double md = static_cast<double>(m);
  const double dd = static_cast<double>(d);
  BoundValue b;
  b.formula = BoundFormula::UpperThm;
  // sqrt(d m^d) / sqrt(m/d) = exp(0.5 (ln d + d ln m - ln m + ln d)).
  const double scale = std::exp(0.5 * (std::log(dd) + dd * std::log(md)) - 0.5 * std::log(md / dd));
  b.value = upper_constant_value(constant) * scale * (std::sqrt(std::log(4.0 * std::numbers::e * md / dd)) + 2.9599);
  if (d < 2) {
    b.reason = "needs d >= 2";
  } else if (m < d) {
    b.reason = "needs m >= d";
  } else {
    b.applicable = true;
  }
  return b;
}

BoundValue mc_reference(std::int64_t n, std::int64_t d, double multiplier) {
  if (n < 1 || d < 1) throw ValidationError("mc_reference needs n, d >= 1");
  BoundValue b;
  b.formula = BoundFormula::MCReference;
  b.value = multiplier * std::sqrt(static_cast<double>(d) * static_cast<double>(n));
  b.applicable = true;
  return b;
}

double jittered_rate(double m, double d) {
  return d * std::pow(m, (d - 1.0) / 2.0) * std::sqrt(1.0 + std::log(m / d));
}

}  // namespace jitterdisc
