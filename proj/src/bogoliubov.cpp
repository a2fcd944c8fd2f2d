#include "rindler/bogoliubov.hpp"

#include <climits>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rindler/error.hpp"

namespace rindler::bogoliubov {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

void require_order(int n_max) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
}

}  // namespace

ModeLabel::ModeLabel(double omega, TransverseTag transverse, Helicity s)
    : omega_(omega), transverse_(transverse), helicity_(s) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("Unruh modes require a finite omega > 0");
  }
}

double omega_from_energy(double energy, double acceleration) {
  if (!(energy > 0.0) || !(acceleration > 0.0) || !std::isfinite(energy) ||
      !std::isfinite(acceleration)) {
    throw DomainError("energy and acceleration must be finite and positive");
  }
  return energy / acceleration;
}

SqueezeParams squeeze_from_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("omega must be finite and positive, got " + std::to_string(omega));
  }
  // Extended precision keeps c^2 - s^2 = 1 at the 1e-14 level even when
  // 1 - q^2 is small.
  const long double w = omega;
  const long double q = std::exp(-kPi * w);
  const long double one_minus_q2 = -std::expm1(-2.0L * kPi * w);
  if (static_cast<double>(q) >= 1.0 || !(one_minus_q2 > 0.0L)) {
    throw NumericalRangeError("omega = " + std::to_string(omega) +
                              " is too small: sinh(pi omega) underflows and q rounds to 1");
  }
  const long double c = 1.0L / std::sqrt(one_minus_q2);
  if (!std::isfinite(static_cast<double>(c))) {
    throw NumericalRangeError("Bogoliubov coefficient overflows for omega = " +
                              std::to_string(omega));
  }
  return {omega, static_cast<double>(q), static_cast<double>(c), static_cast<double>(q * c)};
}

SqueezeParams squeeze_from_q(double q) {
  if (!(q >= 0.0) || !(q < 1.0)) {
    throw DomainError("q must lie in [0, 1), got " + std::to_string(q));
  }
  const long double ql = q;
  const long double c = 1.0L / std::sqrt((1.0L - ql) * (1.0L + ql));
  const double omega = q == 0.0 ? std::numeric_limits<double>::infinity()
                                : static_cast<double>(-std::log(ql) / kPi);
  return {omega, q, static_cast<double>(c), static_cast<double>(ql * c)};
}

double analytic_tail(SeriesKind kind, double q, int n_max) {
  require_order(n_max);
  const double x = q * q;
  const double m = static_cast<double>(n_max) + 1.0;
  const double xm = std::pow(x, m);
  if (kind == SeriesKind::vacuum) return xm;
  // sum_{n>=M} (n+1) x^n = x^M (1 + M(1-x)) / (1-x)^2
  return xm * (1.0 + m * (1.0 - q) * (1.0 + q));
}

CoefficientSeries vacuum_expansion(const SqueezeParams& p, int n_max) {
  require_order(n_max);
  const double amp = std::sqrt(p.one_minus_q2());
  std::vector<double> coeffs(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) coeffs[n] = amp * std::pow(p.q, n);
  return {SeriesKind::vacuum, p.q, std::move(coeffs), analytic_tail(SeriesKind::vacuum, p.q, n_max)};
}

CoefficientSeries one_particle_expansion(const SqueezeParams& p, int n_max) {
  require_order(n_max);
  const double amp = p.one_minus_q2();
  std::vector<double> coeffs(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) coeffs[n] = amp * std::pow(p.q, n) * std::sqrt(n + 1.0);
  return {SeriesKind::one_particle, p.q, std::move(coeffs),
          analytic_tail(SeriesKind::one_particle, p.q, n_max)};
}

int min_cutoff_for_tolerance(const SqueezeParams& p, SeriesKind kind, double tol) {
  if (!(tol > 0.0) || !(tol < 1.0)) {
    throw DomainError("tolerance must lie in (0, 1), got " + std::to_string(tol));
  }
  if (p.q >= 1.0 - std::numeric_limits<double>::epsilon()) {
    throw NumericalRangeError("q = " + std::to_string(p.q) +
                              " is indistinguishable from 1; the series cannot be truncated");
  }
  if (p.q == 0.0) return 0;

  // The tail is strictly decreasing in n_max: bracket by doubling, then bisect.
  auto ok = [&](long n) { return analytic_tail(kind, p.q, static_cast<int>(n)) <= tol; };
  long lo = 0;
  if (ok(lo)) return 0;
  long hi = 1;
  while (!ok(hi)) {
    lo = hi;
    if (hi > INT_MAX / 2) {
      throw NumericalRangeError("cutoff for q = " + std::to_string(p.q) + " exceeds INT_MAX");
    }
    hi *= 2;
  }
  // invariant: !ok(lo), ok(hi)
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return static_cast<int>(hi);
}

}  // namespace rindler::bogoliubov
