// series.hpp
// Compensated summation and certified remainders for the positive series
// that appear in the Fock-space expansions.

#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace rindler::series {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// -t log2(t), with 0 log 0 = 0.
inline double entropy_term(double t) {
  if (t <= 0.0) return 0.0;
  return -t * std::log2(t);
}

// Upper bound on sum_{n > m} entropy_term(t(n)).
//
// Requirements on the positive sequence t: the ratio t(n+1)/t(n) is
// non-increasing in n and never drops below `ratio_floor` in (0, 1).
// Once t(k) < 1 and r = t(k+1)/t(k) < 1, every later term satisfies
//   h(t(n+1)) / h(t(n)) <= r * (1 + ln(1/ratio_floor) / ln(1/t(k))) =: g,
// so the remainder past k is majorized by h(t(k)) g / (1 - g). Terms are
// summed explicitly until g < 1. Returns +inf if that never happens within
// `max_terms` steps.
inline double entropy_tail_bound(const std::function<double(long)>& t, long m,
                                 double ratio_floor, long max_terms = 1'000'000) {
  CompensatedSum explicit_part;
  const double log_floor =
      ratio_floor > 0.0 ? -std::log(ratio_floor) : std::numeric_limits<double>::infinity();
  for (long k = m; k < m + max_terms; ++k) {
    const double tk = t(k);
    if (tk <= 0.0) return explicit_part.value();
    const double tk1 = t(k + 1);
    const double r = tk1 / tk;
    if (tk < 1.0 && r < 1.0) {
      const double g = r * (1.0 + log_floor / -std::log(tk));
      if (g < 1.0) return explicit_part.value() + entropy_term(tk) * g / (1.0 - g);
    }
    explicit_part += entropy_term(tk1);
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace rindler::series
