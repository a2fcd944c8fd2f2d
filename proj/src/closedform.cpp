#include "rindler/closedform.hpp"

#include <cmath>
#include <string>

#include "rindler/error.hpp"
#include "rindler/series.hpp"

namespace rindler::closedform {

namespace {

void require_q(double q) {
  if (!(q >= 0.0) || !(q < 1.0)) throw DomainError("q must lie in [0, 1), got " + std::to_string(q));
}

// lambda_n written out independently of the states module.
double lambda(double q, long n) {
  const double x = q * q;
  return (1.0 - x) * (1.0 - x) * std::pow(x, static_cast<double>(n)) * static_cast<double>(n + 1);
}

}  // namespace

double weighted_geometric_sum(double x) {
  if (!(x >= 0.0)) throw DomainError("weighted_geometric_sum needs x >= 0");
  if (!(x < 1.0)) throw DomainError("sum (n+1) x^n diverges for x >= 1");
  return 1.0 / ((1.0 - x) * (1.0 - x));
}

double helicity_log_negativity_exact(double q) {
  require_q(q);
  // 2 (1-x)^2 * 1/(1-x)^2 = 2 symbolically.
  return 1.0;
}

ClosedFormResult helicity_joint_entropy_exact(double q, double tol) {
  require_q(q);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  auto t = [q](long n) { return lambda(q, n); };

  series::CompensatedSum sum;
  long n = 0;
  double remainder = 0.0;
  for (;; ++n) {
    sum += series::entropy_term(t(n));
    remainder = series::entropy_tail_bound(t, n, q * q);
    if (remainder <= tol) break;
    if (n > 100'000'000) throw NumericalRangeError("entropy series did not converge");
  }
  return {"S_AB", q, sum.value(), static_cast<int>(n + 1), remainder};
}

ClosedFormResult helicity_bob_entropy_exact(double q, double tol) {
  ClosedFormResult r = helicity_joint_entropy_exact(q, tol);
  r.name = "S_B";
  r.value += 1.0;
  return r;
}

double helicity_mutual_info_exact(double q) {
  require_q(q);
  return 2.0;
}

}  // namespace rindler::closedform
