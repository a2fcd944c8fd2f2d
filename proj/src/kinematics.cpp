#include "rindler/kinematics.hpp"

#include <cmath>
#include <string>

#include "rindler/error.hpp"

namespace rindler::kinematics {

namespace {

void require_finite(MinkowskiEvent e) {
  if (!std::isfinite(e.t) || !std::isfinite(e.x)) {
    throw DomainError("Minkowski event coordinates must be finite");
  }
}

// 0.5 * log((u + v) / (u - v)) == atanh(v / u), but keeps full relative
// accuracy close to the light cone where v / u -> +-1.
double rapidity(double u, double v) { return 0.5 * std::log((u + v) / (u - v)); }

// sqrt(|u^2 - v^2|) evaluated as a product to avoid cancellation.
double interval(double u, double v) { return std::sqrt(std::abs((u - v) * (u + v))); }

}  // namespace

std::string_view to_string(Sector s) {
  switch (s) {
    case Sector::R: return "R";
    case Sector::L: return "L";
    case Sector::F: return "F";
    case Sector::P: return "P";
  }
  return "?";
}

ObserverParams ObserverParams::from_energy(double energy, double acceleration) {
  if (!(energy > 0.0) || !(acceleration > 0.0) || !std::isfinite(energy) ||
      !std::isfinite(acceleration)) {
    throw DomainError("observer energy and acceleration must be finite and positive");
  }
  return ObserverParams(acceleration, energy, energy / acceleration);
}

Sector classify_sector(MinkowskiEvent e) {
  require_finite(e);
  const double at = std::abs(e.t);
  const double ax = std::abs(e.x);
  if (at == ax) {
    throw HorizonError("event (t=" + std::to_string(e.t) + ", x=" + std::to_string(e.x) +
                       ") lies on the horizon |t| = |x|");
  }
  if (ax > at) return e.x > 0.0 ? Sector::R : Sector::L;
  return e.t > 0.0 ? Sector::F : Sector::P;
}

RindlerEvent to_rindler(MinkowskiEvent e) {
  const Sector s = classify_sector(e);
  switch (s) {
    case Sector::R: return {rapidity(e.x, e.t), interval(e.x, e.t), s};
    case Sector::L: return {rapidity(e.x, e.t), -interval(e.x, e.t), s};
    case Sector::F: return {rapidity(e.t, e.x), interval(e.t, e.x), s};
    case Sector::P: return {rapidity(e.t, e.x), -interval(e.t, e.x), s};
  }
  return {};
}

MinkowskiEvent to_minkowski(RindlerEvent r) {
  if (!std::isfinite(r.tau) || !std::isfinite(r.rho)) {
    throw DomainError("Rindler event coordinates must be finite");
  }
  if (r.rho == 0.0) throw HorizonError("rho = 0 is the bifurcation point of the horizon");
  const bool positive = r.rho > 0.0;
  const bool expects_positive = r.sector == Sector::R || r.sector == Sector::F;
  if (positive != expects_positive) {
    throw SectorMismatchError("sign of rho inconsistent with sector " +
                              std::string(to_string(r.sector)));
  }
  const double sh = r.rho * std::sinh(r.tau);
  const double ch = r.rho * std::cosh(r.tau);
  if (r.sector == Sector::R || r.sector == Sector::L) return {sh, ch};
  return {ch, sh};
}

double proper_acceleration(double rho) {
  if (!std::isfinite(rho)) throw DomainError("rho must be finite");
  if (rho == 0.0) throw HorizonError("acceleration diverges on the horizon (rho = 0)");
  return 1.0 / std::abs(rho);
}

}  // namespace rindler::kinematics
