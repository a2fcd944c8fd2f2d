// kinematics.hpp
// Minkowski <-> Rindler coordinate maps for the four wedges R, L, F, P.
//
// Conventions: in R and L,  t = rho sinh(tau), x = rho cosh(tau);
//              in F and P,  t = rho cosh(tau), x = rho sinh(tau).
// The radius rho is positive in R and F and negative in L and P, so the sign
// of rho alone distinguishes the two wedges sharing a parametrization.
// The transverse coordinates y, z are inert under every map and are omitted.

#pragma once

#include <string_view>

namespace rindler::kinematics {

enum class Sector { R, L, F, P };

std::string_view to_string(Sector s);

struct MinkowskiEvent {
  double t = 0.0;
  double x = 0.0;
};

struct RindlerEvent {
  double tau = 0.0;
  double rho = 0.0;
  Sector sector = Sector::R;
};

// Bookkeeping for a uniformly accelerated detector: proper acceleration a,
// measured energy E and the dimensionless boost frequency omega = E / a.
class ObserverParams {
 public:
  // Throws DomainError unless both arguments are finite and positive.
  static ObserverParams from_energy(double energy, double acceleration);

  double acceleration() const { return a_; }
  double energy() const { return energy_; }
  double omega() const { return omega_; }

 private:
  ObserverParams(double a, double e, double w) : a_(a), energy_(e), omega_(w) {}
  double a_;
  double energy_;
  double omega_;
};

// R if x > |t|, L if x < -|t|, F if t > |x|, P if t < -|x|.
// Throws HorizonError on the light cone |t| = |x|.
Sector classify_sector(MinkowskiEvent e);

RindlerEvent to_rindler(MinkowskiEvent e);

// Throws HorizonError for rho == 0 and SectorMismatchError when the sign of
// rho is inconsistent with the sector.
MinkowskiEvent to_minkowski(RindlerEvent r);

// Proper acceleration 1/|rho| of the worldline at fixed Rindler radius.
double proper_acceleration(double rho);

}  // namespace rindler::kinematics
