// closedform.hpp
// Analytic values for the helicity-state measures, computed without any
// matrix machinery. Used to cross-check the eigenvalue pipeline.

#pragma once

#include <string>

namespace rindler::closedform {

struct ClosedFormResult {
  std::string name;
  double q = 0.0;
  double value = 0.0;
  int series_terms_used = 0;
  double certified_error = 0.0;  // >= |value - exact|, from the analytic remainder
};

// sum_{n>=0} (n + 1) x^n = 1 / (1 - x)^2. Throws DomainError for x >= 1 or x < 0.
double weighted_geometric_sum(double x);

// log2(2 (1 - q^2)^2 sum (n + 1) q^(2n)). The prefactor cancels the sum, so
// the value is 1 for every q in [0, 1).
double helicity_log_negativity_exact(double q);

// -sum lambda_n log2 lambda_n with lambda_n = (1 - q^2)^2 q^(2n) (n + 1),
// summed until the certified remainder is <= tol.
ClosedFormResult helicity_joint_entropy_exact(double q, double tol);

// Bob's marginal: the same series shifted by one bit.
ClosedFormResult helicity_bob_entropy_exact(double q, double tol);

// S_A + S_B - S_AB = 1 + (S_AB + 1) - S_AB = 2.
double helicity_mutual_info_exact(double q);

}  // namespace rindler::closedform
