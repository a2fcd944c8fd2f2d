// bogoliubov.hpp
// Mode-level Bogoliubov data relating Minkowski and Unruh (Rindler) modes, and
// the Rindler expansions of the Minkowski vacuum and one-particle states.
//
// Every quantity is parameterized by q = exp(-pi * omega). For one Unruh mode
//
//   |0>_M = sum_n sqrt(1 - q^2) q^n             |n>_R |n>_L
//   |1>_M = sum_n (1 - q^2) q^n sqrt(n + 1)     |n+1>_R |n>_L
//
// and the Bogoliubov coefficients are cosh r = 1/sqrt(1 - q^2),
// sinh r = q/sqrt(1 - q^2), which equal exp(+-pi omega/2)/sqrt(2 sinh(pi omega)).

#pragma once

#include <vector>

namespace rindler::bogoliubov {

enum class Helicity : int { minus = -1, plus = +1 };

// Transverse momenta only identify modes; they never enter the numerics.
struct TransverseTag {
  double py = 0.0;
  double pz = 0.0;
  TransverseTag flipped() const { return {-py, -pz}; }
  friend bool operator==(const TransverseTag&, const TransverseTag&) = default;
};

class ModeLabel {
 public:
  // Throws DomainError unless omega is finite and positive.
  ModeLabel(double omega, TransverseTag transverse, Helicity s);

  double omega() const { return omega_; }
  TransverseTag transverse() const { return transverse_; }
  Helicity helicity() const { return helicity_; }

  // The L-wedge partner paired with this R mode in the vacuum expansion:
  // same omega and helicity, opposite transverse momentum.
  ModeLabel partner() const { return {omega_, transverse_.flipped(), helicity_}; }

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;

 private:
  double omega_;
  TransverseTag transverse_;
  Helicity helicity_;
};

struct SqueezeParams {
  double omega;       // +inf when q == 0
  double q;           // exp(-pi omega), in [0, 1)
  double cosh_coeff;  // exp(pi omega/2) / sqrt(2 sinh(pi omega))
  double sinh_coeff;  // exp(-pi omega/2) / sqrt(2 sinh(pi omega))

  double one_minus_q2() const { return (1.0 - q) * (1.0 + q); }
};

// omega = E / a. Throws DomainError for non-positive or non-finite input.
double omega_from_energy(double energy, double acceleration);

// Throws DomainError for omega <= 0 and NumericalRangeError when omega is so
// small that q = exp(-pi omega) rounds to 1 in double precision.
SqueezeParams squeeze_from_omega(double omega);

// Same data built directly from q in [0, 1); q = 0 is the inertial limit.
SqueezeParams squeeze_from_q(double q);

enum class SeriesKind { vacuum, one_particle };

struct CoefficientSeries {
  SeriesKind kind;
  double q;
  std::vector<double> coeffs;  // indexed by the L occupation n = 0..n_max
  double tail_bound;           // exact probability mass beyond n_max

  int n_max() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Exact probability mass carried by the terms n > n_max.
//   vacuum:       q^(2(n_max+1))
//   one_particle: q^(2(n_max+1)) * (1 + (n_max+1)(1 - q^2))
double analytic_tail(SeriesKind kind, double q, int n_max);

CoefficientSeries vacuum_expansion(const SqueezeParams& p, int n_max);
CoefficientSeries one_particle_expansion(const SqueezeParams& p, int n_max);

// Smallest n_max whose analytic tail is <= tol. Throws DomainError unless
// 0 < tol < 1 and NumericalRangeError when q >= 1 - machine epsilon.
int min_cutoff_for_tolerance(const SqueezeParams& p, SeriesKind kind, double tol);

}  // namespace rindler::bogoliubov
