#pragma once

#include <cstdint>
#include <string>

namespace jitterdisc {

enum class BoundFormula { LowerMain, SmallMLower, UpperThm, MCReference };

std::string to_string(BoundFormula formula);

/// A closed-form reference value. `applicable` is false when the formula's
/// hypotheses fail; the value is still reported whenever it is defined.
struct BoundValue {
  double value = 0.0;
  BoundFormula formula = BoundFormula::LowerMain;
  bool applicable = false;
  std::string reason;
};

/// Leading constant of the upper bound: 60.9984 by default; the alternate
/// value 60.9948 is kept selectable.
enum class UpperConstant { Default, Alternate };

double upper_constant_value(UpperConstant which) noexcept;

/// Lower bound on E D*(P) for jittered sampling with k = floor(m/d):
///   (2e)^{-1/2} d m^{(d-1)/2} sqrt(ln k - ln ln k)
///     (1 + sqrt(2 ln k / (m-k)^{d-1}))^{-1/2}
///     (1 - exp(-sqrt(ln k) / (1.5 e^{169/6} sqrt(pi)))).
/// Applicable when m, d >= 2 and k >= e^6. Throws DomainError for k <= 1.
BoundValue lower_main_bound(std::int64_t m, std::int64_t d);

/// (4 / (5 e^{8+1/6} sqrt(2 pi))) exp(-32 / (m-1)^{(d-1)/2}) d (m-1)^{(d-1)/2}.
/// Throws ValidationError unless m, d >= 2.
BoundValue smallm_lower_bound(std::int64_t m, std::int64_t d);

/// C sqrt(d m^d) (sqrt(ln(4em/d)) + 2.9599) / sqrt(m/d) with C from
/// `constant`; m^d handled in the log domain. Applicable when m >= d >= 2.
BoundValue upper_thm_bound(std::int64_t m, std::int64_t d, UpperConstant constant = UpperConstant::Default);

/// multiplier · sqrt(d n), the Monte Carlo order of magnitude.
BoundValue mc_reference(std::int64_t n, std::int64_t d, double multiplier = 1.0);

/// Scaling rate d m^{(d-1)/2} sqrt(1 + ln(m/d)) shared by both bounds.
double jittered_rate(double m, double d);

}  // namespace jitterdisc
