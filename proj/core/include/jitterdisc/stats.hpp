#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace jitterdisc {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single value.
  double std = 0.0;
  /// Normal-approximation 95% interval mean ± 1.96·std/√n.
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
};

/// Two-pass compensated summary; depends only on the order of `values`.
SampleSummary summarize(std::span<const double> values);

/// Worker count: `requested` if positive, else JITTERDISC_THREADS, else
/// hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, count) on `threads` workers. Work is handed
/// out in contiguous chunks; callers write results by index so the outcome
/// does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace jitterdisc
